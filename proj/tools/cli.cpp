#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "arsss/array_codes.hpp"
#include "arsss/generator.hpp"
#include "arsss/json_io.hpp"
#include "arsss/leakage.hpp"
#include "arsss/matrix_io.hpp"
#include "arsss/scheme.hpp"

namespace arsss::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "bad index '" + item + "'");
    }
  }
  return out;
}

std::vector<std::int64_t> parse_q_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (int v : parse_index_list(text)) out.push_back(v);
  return out;
}

std::string score_line(const GeneratorMatrix& g) {
  const GeneratorScore s = score(g);
  return "OC=" + s.oc.str() + " IL=" + s.il.str() + "\n";
}

MatrixHeader header_of(const GeneratorMatrix& g) {
  MatrixHeader h;
  h.block = g.block > 1 || g.kind == GeneratorKind::evenodd || g.kind == GeneratorKind::ring ||
            g.kind == GeneratorKind::kronecker;
  h.n = g.n;
  h.k = g.k;
  h.L = g.L;
  if (h.block) h.l = g.block;
  h.kind = kind_name(g.kind);
  return h;
}

struct MatrixOptions {
  std::string path;
  std::optional<int> k;
  std::optional<int> L;
  std::optional<int> block;
};

void add_matrix_options(CLI::App* app, MatrixOptions& opts) {
  app->add_option("--matrix", opts.path, "Generator matrix file")->required();
  app->add_option("--k", opts.k, "Override k from the matrix header");
  app->add_option("--L", opts.L, "Override L from the matrix header");
  app->add_option("--block", opts.block, "Override the block size l");
}

/// Reads the matrix plus parameters; missing ones default to k = columns / l, L = 1.
struct LoadedMatrix {
  IntMatrix matrix;
  int k = 0, L = 1, block = 1;
  GeneratorKind kind = GeneratorKind::custom;
};

LoadedMatrix load_matrix(const MatrixOptions& opts) {
  MatrixFile file = read_matrix_file(opts.path);
  LoadedMatrix lm;
  lm.block = opts.block.value_or(file.header.l.value_or(1));
  if (lm.block < 1) throw Error(ErrorCode::BadParams, "block size must be positive");
  lm.k = opts.k.value_or(file.header.k.value_or(static_cast<int>(file.matrix.cols()) / lm.block));
  lm.L = opts.L.value_or(file.header.L.value_or(1));
  if (!file.header.kind.empty()) {
    try {
      lm.kind = parse_kind(file.header.kind);
    } catch (const Error&) {
      lm.kind = GeneratorKind::custom;
    }
  }
  lm.matrix = std::move(file.matrix);
  return lm;
}

GeneratorMatrix load_generator(const MatrixOptions& opts) {
  LoadedMatrix lm = load_matrix(opts);
  return make_generator(std::move(lm.matrix), lm.k, lm.L, lm.block, lm.kind);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<LeakageReport>& reports) {
  out << "q,H_S,H_S_given,ratio,lower,upper\n";
  for (const auto& r : reports) {
    out << r.q << ',' << format_double(r.h_s) << ',' << format_double(r.h_s_given_y) << ','
        << format_double(r.ratio) << ',' << format_double(r.lower_bound) << ',' << format_double(r.upper_bound)
        << '\n';
  }
}

Json rational_json(const Rational& r) { return to_string(r); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic ramp secret sharing for probability vectors", "arsss"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a generator matrix and print it with its score");
  std::string kind;
  int n = 0, k = 0, L = 1, p = 0, l = 0;
  std::optional<std::uint64_t> construct_seed;
  construct->add_option("--kind", kind, "vandermonde|cauchy|random|circulant|evenodd|ring|kronecker")->required();
  construct->add_option("--n", n, "Number of shares");
  construct->add_option("--k", k, "Shares needed for recovery");
  construct->add_option("--L", L, "Secret length");
  construct->add_option("--p", p, "Prime for array constructions");
  construct->add_option("--l", l, "Array length for kronecker lifting");
  construct->add_option("--seed", construct_seed, "Seed for the random construction");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the rank conditions of a matrix");
  MatrixOptions verify_opts;
  add_matrix_options(verify, verify_opts);

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "Encode a secret into shares");
  MatrixOptions encode_opts;
  add_matrix_options(encode_cmd, encode_opts);
  std::string secret_path;
  std::optional<std::uint64_t> encode_seed;
  bool negatives = false;
  encode_cmd->add_option("--secret", secret_path, "Secret JSON file")->required();
  encode_cmd->add_option("--seed", encode_seed, "Seed for auxiliary randomness (OS entropy if absent)");
  encode_cmd->add_flag("--negatives", negatives, "Also produce negative shares");

  // recover
  auto* recover_cmd = app.add_subcommand("recover", "Recover the secret from k shares");
  MatrixOptions recover_opts;
  add_matrix_options(recover_cmd, recover_opts);
  std::string shares_path, indices_text;
  recover_cmd->add_option("--shares", shares_path, "Shares JSON file")->required();
  recover_cmd->add_option("--indices", indices_text, "Comma separated 1-based share numbers")->required();

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Plan the mixture for one decode row");
  MatrixOptions plan_opts;
  add_matrix_options(plan_cmd, plan_opts);
  std::string plan_shares, plan_indices, method = "i";
  std::size_t row = 1;
  plan_cmd->add_option("--shares", plan_shares, "Shares JSON file")->required();
  plan_cmd->add_option("--indices", plan_indices, "Comma separated 1-based share numbers")->required();
  plan_cmd->add_option("--method", method, "i (single mix) or ii (split mix)")
      ->check(CLI::IsMember({"i", "ii"}));
  plan_cmd->add_option("--row", row, "1-based decode row")->check(CLI::PositiveNumber);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Exact leakage H(S|Y'') as CSV");
  MatrixOptions analyze_opts;
  add_matrix_options(analyze, analyze_opts);
  std::string q_text = "4,8,12,16", subset_text = "1";
  int m = 2;
  analyze->add_option("--q", q_text, "Comma separated resolutions");
  analyze->add_option("--m", m, "Alphabet width");
  analyze->add_option("--subset", subset_text, "Comma separated 1-based observed shares");

  // tables
  auto* tables = app.add_subcommand("tables", "Leakage ratios of the (2,1,2) scheme for m = 2 or m = 4");
  int which = 1;
  tables->add_option("--which", which, "1 for m = 2, 2 for m = 4")->required()->check(CLI::IsMember({1, 2}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*construct) {
      GeneratorMatrix g;
      const GeneratorKind want = parse_kind(kind);
      switch (want) {
        case GeneratorKind::vandermonde: g = vandermonde_generator(n, k, L); break;
        case GeneratorKind::cauchy: g = cauchy_generator(n, k, L); break;
        case GeneratorKind::random:
          g = random_generator(n, k, L, construct_seed.value_or(0));
          break;
        case GeneratorKind::circulant: g = circulant_generator(k); break;
        case GeneratorKind::evenodd:
          if (!p) throw Error(ErrorCode::BadParams, "--p is required");
          g = evenodd_generator(p, L, k > 0 ? k + 2 : p + 2);
          break;
        case GeneratorKind::ring:
          if (!p) throw Error(ErrorCode::BadParams, "--p is required");
          g = ring_generator(n, k, p, L);
          break;
        case GeneratorKind::kronecker:
          if (l < 1) throw Error(ErrorCode::BadParams, "--l is required");
          g = kronecker_block_generator(vandermonde_generator(n, k, L), l);
          break;
        default: throw Error(ErrorCode::BadParams, "cannot construct kind '" + kind + "'");
      }
      out << format_header(header_of(g)) << format_matrix(g.matrix) << score_line(g);
      return 0;
    }

    if (*verify) {
      const LoadedMatrix lm = load_matrix(verify_opts);
      const RankCheck check = check_rank_conditions(lm.matrix, lm.k, lm.L, lm.block);
      const GeneratorScore s = score(lm.matrix);
      if (!check.ok) {
        out << "rank_conditions=fail condition=" << (check.failed_condition == 1 ? "i" : "ii") << " rows=";
        for (std::size_t i = 0; i < check.witness.size(); ++i) out << (i ? "," : "") << check.witness[i] + 1;
        out << '\n';
        err << "error: " << code_name(ErrorCode::RankConditionViolated) << ": rank condition fails\n";
        return 1;
      }
      out << "rank_conditions=ok k=" << lm.k << " L=" << lm.L << " block=" << lm.block << '\n';
      out << "OC=" << s.oc << " IL=" << s.il << '\n';
      return 0;
    }

    if (*encode_cmd) {
      const GeneratorMatrix g = load_generator(encode_opts);
      const ProbSequence secret = prob_sequence_from_json(parse_json(read_file(secret_path)));
      if (secret.size() != static_cast<std::size_t>(g.L * g.block)) {
        throw Error(ErrorCode::DimensionMismatch, "secret needs L * l symbols");
      }
      Rng rng = encode_seed ? Rng(*encode_seed) : Rng();
      const ProbSequence x = make_auxiliary(secret, g.matrix.cols(), rng);
      out << to_json(encode(g, x, negatives)).dump(2) << '\n';
      return 0;
    }

    if (*recover_cmd) {
      const GeneratorMatrix g = load_generator(recover_opts);
      const SharesBundle bundle = bundle_from_json(parse_json(read_file(shares_path)));
      out << to_json(recover(g, bundle, parse_index_list(indices_text))).dump(2) << '\n';
      return 0;
    }

    if (*plan_cmd) {
      const GeneratorMatrix g = load_generator(plan_opts);
      const SharesBundle bundle = bundle_from_json(parse_json(read_file(plan_shares)));
      if (bundle.generator_fingerprint != fingerprint(g.matrix)) {
        throw Error(ErrorCode::FingerprintMismatch, "shares were produced by a different generator");
      }
      const auto indices = parse_index_list(plan_indices);
      const auto a = decode_row(g, indices, row - 1);
      const std::vector<int> used(indices.begin(), indices.begin() + g.k);
      const auto res = gather_shares(bundle, used).resolutions();
      const MixMethod mm = method == "i" ? MixMethod::single_mix : MixMethod::split_mix;
      const MixturePlan plan = plan_mixture(a, res, mm, bundle.negatives.has_value());
      const CostReport cost = cost_report(g.n, g.k, g.L);

      Json j;
      j["method"] = method;
      j["row"] = row;
      j["coefficients"] = Json::array();
      for (const auto& c : a) j["coefficients"].push_back(rational_json(c));
      auto portions = [&](const std::vector<MixPortion>& list) {
        Json arr = Json::array();
        for (const auto& pt : list) {
          Json e;
          e["share_symbol"] = pt.share_symbol + 1;
          e["vessel"] = pt.from_negative ? "negative" : "positive";
          e["units"] = rational_json(pt.units);
          arr.push_back(e);
        }
        return arr;
      };
      j["positive_mix"] = portions(plan.positive);
      j["negative_mix"] = portions(plan.negative);
      j["total_units"] = rational_json(plan.total_units());
      j["mix_vessels"] = plan.mix_vessels;
      j["reads"] = plan.reads;
      j["naive_reads"] = cost.naive_reads;
      j["synthesis_ops"] = bundle.synthesis_ops;
      out << j.dump(2) << '\n';
      return 0;
    }

    if (*analyze) {
      const GeneratorMatrix g = load_generator(analyze_opts);
      const auto series = asymptotic_check(g, parse_index_list(subset_text), parse_q_list(q_text), m);
      write_csv(out, series.reports);
      return 0;
    }

    if (*tables) {
      const GeneratorMatrix g = make_generator(IntMatrix{{1, 1}, {1, -1}}, 2, 1);
      const auto series = asymptotic_check(g, {1}, {4, 8, 12, 16}, which == 1 ? 2 : 4);
      write_csv(out, series.reports);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace arsss::cli
