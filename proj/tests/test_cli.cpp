#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "padic/funcring.hpp"

using namespace padic;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("vp command") {
  const auto r = run_cli({"vp", "--p", "5", "250"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run_cli({"vp", "--p", "3", "0"}).out == "inf\n");
  CHECK(run_cli({"vp", "--p", "3", "18/5"}).out == "2\n");
}

TEST_CASE("embed and norm commands") {
  const auto r = run_cli({"embed", "--p", "3", "--N", "4", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "p^0 * [1,0,0,0]\n");
  CHECK(run_cli({"norm", "--p", "5", "5"}).out == "1/5\n");
  CHECK(run_cli({"norm", "--p", "3", "1/9"}).out == "9\n");
  CHECK(run_cli({"norm", "--p", "3", "p^2 * [1,1]"}).out == "1/9\n");
}

TEST_CASE("gamma command reproduces the exact rational value at p=2") {
  const auto r = run_cli({"gamma", "--p", "2", "--N", "6", "2"});
  CHECK(r.code == 0);
  // 1/3 as a 2-adic to 6 digits: 1 + 2 + 8 + 32 ≡ 43 mod 64.
  CHECK(r.out == "p^0 * [1,1,0,1,0,1]\n");
  // gamma of an embedded fixed point is an exact zero.
  CHECK(run_cli({"gamma", "--p", "3", "1"}).out == "0\n");
}

TEST_CASE("hensel-root command") {
  const auto r = run_cli({"hensel-root", "--p", "3", "--q", "2", "--N", "5", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "p^0 * [1,2,2,2,2]\n");  // -2
  const auto bad = run_cli({"hensel-root", "--p", "3", "--q", "3", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("q must differ") != std::string::npos);
}

TEST_CASE("divides command end to end") {
  const auto g = temp_file("cli_g.fn", "p=3 space=finite:1\np^0 * [2,0,0,0,0,0,0,0]\n");
  const auto f = temp_file("cli_f.fn", "p=3 space=finite:1\np^0 * [2,0,0,0,0,0,0,0]\n");
  const auto witness_path = std::filesystem::temp_directory_path() / "cli_h.fn";

  const auto r = run_cli({"divides", "--p", "3", "--q", "2", "--out", witness_path.string(),
                          g.string(), f.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "result=divides\n");
  std::ifstream in(witness_path);
  const LCFunction h = read_function(in);
  CHECK(h.value(0) == embed_rational(Rational(-4), 3, 8));

  // Refutation: g = (1, p), f = (p, 1).
  const auto g2 = temp_file("cli_g2.fn", "p=3 space=finite:2\np^0 * [1]\np^1 * [1]\n");
  const auto f2 = temp_file("cli_f2.fn", "p=3 space=finite:2\np^1 * [1]\np^0 * [1]\n");
  const auto r2 = run_cli({"divides", "--p", "3", "--q", "2", g2.string(), f2.string()});
  CHECK(r2.code == 1);
  CHECK(r2.out.find("result=refuted") == 0);
  CHECK(r2.out.find("point=1") != std::string::npos);
  CHECK(r2.out.find("vsum=1") != std::string::npos);

  // Without --out the witness follows the result line.
  const auto r3 = run_cli({"divides", "--p", "3", "--q", "2", g.string(), f.string()});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("result=divides\np=3 space=finite:1\n") == 0);
}

TEST_CASE("divides command rejects bad inputs with diagnostics") {
  const auto bad = temp_file("cli_bad.fn", "p=3 space=finite:2\np^0 * [7]\np^0 * [1]\n");
  const auto f = temp_file("cli_okf.fn", "p=3 space=finite:2\np^0 * [1]\np^0 * [1]\n");
  const auto r = run_cli({"divides", "--p", "3", "--q", "2", bad.string(), f.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  const auto missing = run_cli({"divides", "--p", "3", "--q", "2", "/nonexistent.fn", f.string()});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("axioms-check exit codes and report shape") {
  const auto r = run_cli({"axioms-check", "--p", "3", "--trials", "150", "--seed", "1",
                          "canonical-qp"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(line.find("axiom=") == 0);
    CHECK(line.find(" fail=0 ") != std::string::npos);
  }
  CHECK(n == 10);  // axioms 1..8 + totality + cancellation

  // canonical-star: totality fails with a witness, but axioms pass -> exit 0.
  const auto star = run_cli({"axioms-check", "--p", "3", "--trials", "300", "--seed", "1",
                             "--space", "finite:2", "canonical-star"});
  CHECK(star.code == 0);
  CHECK(star.out.find("axiom=totality") != std::string::npos);
  const auto total_pos = star.out.find("axiom=totality");
  const auto total_line = star.out.substr(total_pos, star.out.find('\n', total_pos) - total_pos);
  CHECK(total_line.find("fail=0") == std::string::npos);
  CHECK(total_line.find("witness=a=") != std::string::npos);

  const auto nospace = run_cli({"axioms-check", "--p", "3", "canonical-star"});
  CHECK(nospace.code == 2);
  const auto unknown = run_cli({"axioms-check", "--p", "3", "nonsense"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown relation") != std::string::npos);
}

TEST_CASE("seminorm-check and local-global") {
  const auto r = run_cli({"seminorm-check", "--p", "3", "--trials", "100", "--seed", "2",
                          "canonical-q"});
  CHECK(r.code == 0);
  CHECK(r.out.find("law=rational-norm") != std::string::npos);
  const auto lg = run_cli({"local-global", "--p", "3", "--trials", "200", "--seed", "3",
                           "--space", "zp:1"});
  CHECK(lg.code == 0);
  CHECK(lg.out == "trials=200 agree=200 disagree=0 undecided=0\n");
}

TEST_CASE("approx command") {
  const auto r = run_cli({"approx", "--p", "3", "--k", "1", "--N", "4", "--coeffs", "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "p=3 space=zp:1\n"
        "0\n"
        "p^0 * [1,0,0,0]\n"
        "p^0 * [2,0,0,0]\n"
        "error_bound=p^-1\n");
  const auto constant = run_cli({"approx", "--p", "3", "--k", "2", "--coeffs", "7"});
  CHECK(constant.out.find("error_bound=0\n") != std::string::npos);
  const auto bad = run_cli({"approx", "--p", "3", "--k", "1", "--coeffs", "1/3,1"});
  CHECK(bad.code == 2);
  const auto badfield = run_cli({"approx", "--p", "3", "--k", "1", "--coeffs", "1,x"});
  CHECK(badfield.code == 2);
  CHECK(badfield.err.find("entry 1") != std::string::npos);
}

TEST_CASE("spectrum command") {
  const auto r = run_cli({"spectrum", "--space", "finite:3"});
  CHECK(r.code == 0);
  CHECK(r.out == "points=3\n0\n1\n2\n");
  const auto zp = run_cli({"spectrum", "--space", "zp:2", "--p", "2"});
  CHECK(zp.out == "points=4\n0\n1\n2\n3\n");
}

TEST_CASE("flag validation") {
  CHECK(run_cli({"vp", "--p", "4", "9"}).code == 2);
  CHECK(run_cli({"embed", "--p", "3", "--N", "0", "1"}).code == 2);
  CHECK(run_cli({"vp", "--p", "5", "abc"}).code == 2);
}

TEST_CASE("seed comes from the environment when the flag is absent") {
  setenv("PADIC_SEED", "12345", 1);
  const auto via_env = run_cli({"axioms-check", "--p", "3", "--trials", "50", "canonical-qp"});
  unsetenv("PADIC_SEED");
  const auto via_flag =
      run_cli({"axioms-check", "--p", "3", "--trials", "50", "--seed", "12345", "canonical-qp"});
  CHECK(via_env.out == via_flag.out);

  setenv("PADIC_SEED", "not-a-number", 1);
  const auto bad = run_cli({"axioms-check", "--p", "3", "--trials", "10", "canonical-qp"});
  unsetenv("PADIC_SEED");
  CHECK(bad.code == 2);
}

TEST_CASE("same seed, same bytes") {
  const std::vector<std::string> cmd{"axioms-check", "--p", "5", "--trials", "120",
                                     "--seed", "9", "canonical-qp"};
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}
