#include <doctest.h>

#include <map>

#include "arsss/array_codes.hpp"
#include "arsss/combinatorics.hpp"
#include "arsss/json_io.hpp"
#include "arsss/scheme.hpp"

using namespace arsss;

namespace {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an arsss::Error");
  return ErrorCode::BadParams;
}

const GeneratorMatrix& example4() {
  static const GeneratorMatrix g = make_generator(IntMatrix{{1, 1}, {1, -1}}, 2, 1);
  return g;
}

ProbSequence one(const ProbVector& v) {
  ProbSequence s;
  s.push_back(v);
  return s;
}

}  // namespace

TEST_CASE("auxiliary symbols") {
  Rng rng(1);
  const ProbSequence s = one(scalar_prob(3, 8));
  CHECK(make_auxiliary(s, 1, rng) == s);

  for (int i = 0; i < 200; ++i) {
    const ProbSequence x = make_auxiliary(s, 2, rng);
    CHECK(x[0] == s[0]);
    CHECK((x[1].scalar() >= 0 && x[1].scalar() <= 8));
  }
  const ProbSequence s4 = one(make_prob_vector({2, 2, 2, 2}, 4));
  for (int i = 0; i < 200; ++i) CHECK(make_auxiliary(s4, 2, rng)[1].is_restricted());
  CHECK(code_of([&] { make_auxiliary(s, 0, rng); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { make_auxiliary(one(scalar_prob(1, 3)), 2, rng); }) == ErrorCode::NotRestricted);
}

TEST_CASE("restricted sampling is uniform over Q'_{8,4}") {
  Rng rng(12345);
  const auto alphabet = enumerate_alphabet({8, 4, true});
  std::map<std::vector<std::int64_t>, int> counts;
  constexpr int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const ProbVector v = sample_restricted(8, 4, rng);
    ++counts[{v.values().begin(), v.values().end()}];
  }
  CHECK(counts.size() == alphabet.size());
  const double expected = static_cast<double>(draws) / static_cast<double>(alphabet.size());
  double chi2 = 0;
  for (const auto& [k, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 84 degrees of freedom; 140 sits far in the upper tail (p < 1e-4).
  CHECK(chi2 < 140.0);
}

TEST_CASE("seeded randomness is reproducible") {
  Rng a(77), b(77);
  for (int i = 0; i < 50; ++i) CHECK(sample_restricted(16, 4, a) == sample_restricted(16, 4, b));
}

TEST_CASE("encode: two-share setup, uniform inputs and resolutions") {
  ProbSequence x;
  x.push_back(scalar_prob(2, 8));
  x.push_back(scalar_prob(4, 8));
  const SharesBundle b = encode(example4(), x, false);
  CHECK(b.shares.size() == 2);
  CHECK(b.shares[0] == scalar_prob(6, 16));
  CHECK(b.synthesis_ops == 4);  // the -1 entry needs x- vessels

  ProbSequence u;
  for (int j = 0; j < 3; ++j) u.push_back(uniform_vector(8, 4));
  const GeneratorMatrix v = vandermonde_generator(5, 3);
  const SharesBundle ub = encode(v, u, false);
  for (std::size_t i = 0; i < 5; ++i) {
    std::int64_t row = 0;
    for (auto e : v.matrix.row(i)) row += e;
    CHECK(ub.shares[i] == uniform_vector(row * 8, 4));
  }
  CHECK(ub.synthesis_ops == 3);

  Rng rng(3);
  const ProbSequence xr = make_auxiliary(one(sample_restricted(8, 2, rng)), 3, rng);
  const SharesBundle rb = encode(v, xr, true);
  CHECK(rb.synthesis_ops == 6);
  REQUIRE(rb.negatives);
  CHECK(*rb.negatives == negate(rb.shares));
  CHECK(rb.resolutions() == std::vector<std::int64_t>{24, 56, 48, 56, 80});
}

TEST_CASE("encode rejects bad inputs") {
  ProbSequence x;
  x.push_back(scalar_prob(2, 8));
  CHECK(code_of([&] { encode(example4(), x, false); }) == ErrorCode::DimensionMismatch);
  GeneratorMatrix bad = example4();
  bad.matrix = IntMatrix{{1, 1}, {1, 1}};
  x.push_back(scalar_prob(2, 8));
  CHECK(code_of([&] { encode(bad, x, false); }) == ErrorCode::RankConditionViolated);
}

TEST_CASE("recover: (2,4) at q = 8 and share subsets") {
  ProbSequence x;
  x.push_back(scalar_prob(2, 8));
  x.push_back(scalar_prob(4, 8));
  const SharesBundle b = encode(example4(), x, false);
  CHECK(recover(example4(), b, {1, 2}) == one(scalar_prob(2, 8)));
  CHECK(recover(example4(), b, {2, 1}) == one(scalar_prob(2, 8)));
  CHECK(code_of([&] { recover(example4(), b, {1}); }) == ErrorCode::NotEnoughShares);
  CHECK(code_of([&] { recover(example4(), b, {1, 3}); }) == ErrorCode::BadParams);

  Rng rng(5);
  const GeneratorMatrix v = vandermonde_generator(5, 3);
  const ProbSequence secret = one(sample_restricted(16, 4, rng));
  const SharesBundle vb = encode(v, make_auxiliary(secret, 3, rng), false);
  CHECK(recover(v, vb, {1, 2, 3}) == secret);
  CHECK(recover(v, vb, {3, 4, 5}) == secret);
  CHECK(recover(v, vb, {5, 1, 3, 2}) == secret);
  CHECK(recover(v, {2, 4, 5}, gather_shares(vb, {2, 4, 5})) == secret);

  CHECK(code_of([&] { recover(cauchy_generator(5, 3), vb, {1, 2, 3}); }) == ErrorCode::FingerprintMismatch);
}

TEST_CASE("recover flags corrupted shares") {
  ProbSequence x;
  x.push_back(scalar_prob(2, 8));
  x.push_back(scalar_prob(4, 8));
  SharesBundle b = encode(example4(), x, false);
  ProbSequence tampered;
  tampered.push_back(scalar_prob(7, 16));
  tampered.push_back(b.shares[1]);
  b.shares = tampered;
  CHECK(code_of([&] { recover(example4(), b, {1, 2}); }) == ErrorCode::NonIntegralSolution);
}

TEST_CASE("array generators round-trip") {
  Rng rng(21);
  for (const BlockGeneratorMatrix& g : {evenodd_generator(3, 1, 4), evenodd_generator(5, 2), ring_generator(5, 3, 5, 2),
                                        kronecker_block_generator(vandermonde_generator(4, 2), 3)}) {
    ProbSequence secret;
    for (int i = 0; i < g.L * g.block; ++i) secret.push_back(sample_restricted(8, 4, rng));
    const SharesBundle b = encode(g, make_auxiliary(secret, g.matrix.cols(), rng), true);
    for_each_combination(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.k), [&](const std::vector<std::size_t>& s) {
      std::vector<int> idx;
      for (auto i : s) idx.push_back(static_cast<int>(i) + 1);
      CHECK(recover(g, b, idx) == secret);
      return true;
    });
  }
}

TEST_CASE("mixture plans") {
  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
  const MixturePlan p2 = plan_mixture(half, {16, 16}, MixMethod::split_mix, false);
  CHECK(p2.reads == 1);
  CHECK(p2.negative.empty());
  CHECK(p2.positive.size() == 2);
  CHECK(p2.positive[0].units == 8);

  const std::vector<Rational> mixed{Rational(1, 2), Rational(-1, 2)};
  const MixturePlan p1 = plan_mixture(mixed, {16, 16}, MixMethod::single_mix, true);
  CHECK(p1.reads == 1);
  CHECK(p1.mix_vessels == 1);
  CHECK(p1.positive[1].from_negative);
  CHECK(p1.total_units() == 16);

  const MixturePlan p3 = plan_mixture(mixed, {16, 16}, MixMethod::split_mix, false);
  CHECK(p3.reads == 2);
  CHECK(code_of([&] { plan_mixture(mixed, {16, 16}, MixMethod::single_mix, false); }) ==
        ErrorCode::NegativesUnavailable);
  CHECK(code_of([&] { plan_mixture(mixed, {16}, MixMethod::single_mix, true); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("simulated mixtures equal the algebraic circle product") {
  Rng rng(31);
  const GeneratorMatrix v = vandermonde_generator(5, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = trial % 2 ? 4 : 2;
    const ProbSequence secret = one(sample_restricted(8, m, rng));
    const SharesBundle b = encode(v, make_auxiliary(secret, 3, rng), true);
    const std::vector<int> idx{1, 3, 5};
    const ProbSequence y = gather_shares(b, idx);
    const ProbSequence yn = negate(y);
    for (std::size_t row = 0; row < 3; ++row) {
      const auto a = decode_row(v, idx, row);
      RatMatrix arow(1, 3);
      for (std::size_t j = 0; j < 3; ++j) arow(0, j) = a[j];
      const RatProbVector expect = matrix_circle_mul(arow, y)[0];
      for (MixMethod method : {MixMethod::single_mix, MixMethod::split_mix}) {
        const MixturePlan plan = plan_mixture(a, y.resolutions(), method, true);
        Rational units = 0;
        for (std::size_t j = 0; j < 3; ++j) units += (a[j] < 0 ? Rational(-a[j]) : a[j]) * y[j].resolution();
        CHECK(plan.total_units() == units);
        const RatProbVector got = simulate_mixture(plan, y, yn);
        CHECK(got == expect);
      }
    }
    for (MixMethod method : {MixMethod::single_mix, MixMethod::split_mix}) {
      const MixtureRecovery r = recover_by_mixture(v, b, idx, method);
      CHECK(r.secret == secret);
    }
  }
}

TEST_CASE("sequencing and synthesis costs for (5,3,1)") {
  const CostReport c = cost_report(5, 3, 1);
  CHECK(c.naive_reads == 3);
  CHECK(c.single_mix_reads == 1);
  CHECK(c.split_mix_reads == 2);
  CHECK(c.synthesis == 3);
  CHECK(c.synthesis_with_negatives == 6);
}

TEST_CASE("naive finite-field baseline") {
  Rng rng(4);
  const ProbSequence s = one(scalar_prob(5, 8));
  const NaiveBaseline nb = naive_baseline(s, 2, 2, 1, 8, rng);
  CHECK(nb.field == 11);
  CHECK(nb.cost.naive_reads == 2);
  CHECK(nb.cost.single_mix_reads == 1);
  CHECK(naive_recover(nb, {1, 2}, 2, 1, 8, 2) == s);
  CHECK(naive_recover(nb, {2, 1}, 2, 1, 8, 2) == s);
  CHECK(alphabet_size(nb.share_resolution, 2) >= nb.field);

  ProbSequence two;
  two.push_back(scalar_prob(1, 4));
  two.push_back(scalar_prob(3, 4));
  const NaiveBaseline full = naive_baseline(two, 3, 2, 2, 4, rng);
  CHECK(full.cost.naive_reads == full.cost.synthesis);
  CHECK(naive_recover(full, {3, 1}, 2, 2, 4, 2) == two);

  const ProbSequence s4 = one(sample_restricted(8, 4, rng));
  const NaiveBaseline nb4 = naive_baseline(s4, 5, 3, 1, 8, rng);
  CHECK(nb4.field == 89);  // smallest prime >= |Q'_{8,4}| = 85
  CHECK(nb4.cost.naive_reads == 3);
  for_each_combination(5, 3, [&](const std::vector<std::size_t>& pick) {
    std::vector<int> idx;
    for (auto i : pick) idx.push_back(static_cast<int>(i) + 1);
    CHECK(naive_recover(nb4, idx, 3, 1, 8, 4) == s4);
    return true;
  });
  CHECK(code_of([&] { naive_baseline(s4, 5, 3, 1, 8, rng, 50); }) == ErrorCode::FieldTooLarge);
  CHECK(code_of([&] { naive_recover(nb4, {1, 2}, 3, 1, 8, 4); }) == ErrorCode::NotEnoughShares);
}

TEST_CASE("bundle JSON round trip") {
  Rng rng(9);
  const GeneratorMatrix v = vandermonde_generator(5, 3);
  const SharesBundle b = encode(v, make_auxiliary(one(sample_restricted(8, 4, rng)), 3, rng), true);
  const Json j = to_json(b);
  const SharesBundle back = bundle_from_json(parse_json(j.dump()));
  CHECK(back.shares == b.shares);
  CHECK(*back.negatives == *b.negatives);
  CHECK(back.generator_fingerprint == b.generator_fingerprint);
  CHECK(back.indices == b.indices);
  CHECK(back.synthesis_ops == b.synthesis_ops);
  CHECK(to_json(back).dump() == j.dump());
  CHECK(j.begin().key() == "generator_fingerprint");
}
