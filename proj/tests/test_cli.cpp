#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "arsss/json_io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = arsss::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("arsss_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("construct prints the matrix and its score") {
  const Result r = run({"construct", "--kind", "vandermonde", "--n", "5", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 1 1\n1 2 4\n") != std::string::npos);
  CHECK(r.out.find("OC=10 IL=8820") != std::string::npos);

  const Result e = run({"construct", "--kind", "evenodd", "--p", "3", "--k", "2", "--L", "1"});
  CHECK(e.code == 0);
  CHECK(e.out.find("OC=3 IL=24") != std::string::npos);

  CHECK(run({"construct", "--kind", "random", "--n", "5", "--k", "3", "--seed", "4"}).out ==
        run({"construct", "--kind", "random", "--n", "5", "--k", "3", "--seed", "4"}).out);
}

TEST_CASE("tables reproduce the m = 2 ratios") {
  const Result r = run({"tables", "--which", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q,H_S,H_S_given,ratio,lower,upper\n", 0) == 0);
  CHECK(r.out.find("4,2.321928,1.644777,0.708367") != std::string::npos);
  CHECK(r.out.find("16,4.087463,3.370956,0.824706") != std::string::npos);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"tables", "--which", "3"}).code == 2);
  const Result missing = run({"verify", "--matrix", "/nonexistent/matrix.txt"});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: IO_ERROR:", 0) == 0);
}

TEST_CASE("construct, encode, recover and plan through files") {
  TempDir dir;
  const std::string matrix = dir.write("g.txt", run({"construct", "--kind", "vandermonde", "--n", "5", "--k", "3"}).out);
  const std::string secret = dir.write("s.json", R"({"m":4,"symbols":[{"m":4,"q":8,"values":[3,1,4,0]}]})");

  const Result verify = run({"verify", "--matrix", matrix});
  CHECK(verify.code == 0);
  CHECK(verify.out.rfind("rank_conditions=ok k=3 L=1", 0) == 0);

  const Result enc = run({"encode", "--matrix", matrix, "--secret", secret, "--seed", "11", "--negatives"});
  REQUIRE(enc.code == 0);
  CHECK(enc.out == run({"encode", "--matrix", matrix, "--secret", secret, "--seed", "11", "--negatives"}).out);
  const std::string shares = dir.write("y.json", enc.out);

  const Result rec = run({"recover", "--matrix", matrix, "--shares", shares, "--indices", "5,2,4"});
  REQUIRE(rec.code == 0);
  const auto parsed = arsss::prob_sequence_from_json(arsss::parse_json(rec.out));
  CHECK(parsed[0] == arsss::make_prob_vector({3, 1, 4, 0}, 4));

  const Result few = run({"recover", "--matrix", matrix, "--shares", shares, "--indices", "1,2"});
  CHECK(few.code == 1);
  CHECK(few.err.rfind("error: NOT_ENOUGH_SHARES:", 0) == 0);

  const Result plan = run({"plan", "--matrix", matrix, "--shares", shares, "--indices", "1,2,3", "--method", "i"});
  REQUIRE(plan.code == 0);
  const auto j = arsss::parse_json(plan.out);
  CHECK(j["reads"] == 1);
  CHECK(j["naive_reads"] == 3);
  CHECK(j["synthesis_ops"] == 6);

  const std::string other = dir.write("c.txt", run({"construct", "--kind", "cauchy", "--n", "5", "--k", "3"}).out);
  const Result wrong = run({"recover", "--matrix", other, "--shares", shares, "--indices", "1,2,3"});
  CHECK(wrong.code == 1);
  CHECK(wrong.err.find("FINGERPRINT_MISMATCH") != std::string::npos);
}

TEST_CASE("verify reports a failing rank condition") {
  TempDir dir;
  const std::string bad = dir.write("bad.txt", "# generator n=3 k=2 L=1 kind=custom\n1 1\n2 2\n1 -1\n");
  const Result r = run({"verify", "--matrix", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("rank_conditions=fail condition=i rows=1,2") != std::string::npos);
}

TEST_CASE("analyze emits one CSV row per resolution") {
  TempDir dir;
  const std::string g = dir.write("g.txt", "# generator n=2 k=2 L=1 kind=custom\n1 1\n1 -1\n");
  const Result r = run({"analyze", "--matrix", g, "--q", "4,8", "--m", "4", "--subset", "1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 3);
}
