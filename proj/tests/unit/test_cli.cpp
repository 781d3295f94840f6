#include <doctest.h>

#include <sstream>

#include "abtor/cli.hpp"

using namespace abtor;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(ABTOR_SAMPLES_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("cli examples") {
  auto fox = run({"fox", "--gens", "x y", "--word", "x^3", "--wrt", "x"});
  CHECK(fox.code == 0);
  CHECK(fox.out == "1 + x + x^2\n");

  auto classify = run({"lens", "classify", "7", "2", "7", "4"});
  CHECK(classify.code == 0);
  CHECK(first_line(classify.out) == "homeomorphic (orientation-preserving): yes");

  auto alex = run({"alexander", sample("trefoil.pres")});
  CHECK(alex.code == 0);
  CHECK(first_line(alex.out) == "Delta = t^2 - t + 1");
  CHECK(alex.out.find("# defined up to ± monomial") != std::string::npos);

  auto bad = run({"chain-torsion", sample("not_acyclic.cplx")});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("torsion = 0 (complex not acyclic)") != std::string::npos);
}

TEST_CASE("cli commands") {
  auto higher = run({"fox", "--gens", "x y", "--word", "x y", "--wrt", "y", "--wrt", "x"});
  CHECK(higher.code == 0);
  auto stdin_pres = run({"alexander", "-"}, "gens: x y\nrel: x^2 y^-3\n");
  CHECK(first_line(stdin_pres.out) == "Delta = t^2 - t + 1");
  auto ideal = run({"alexander", sample("cyclic_5.pres"), "--ideal", "0"});
  CHECK(first_line(ideal.out) == "Delta_0 = 5");
  auto step = run({"chain-torsion", sample("step_t_minus_2.cplx")});
  CHECK(step.out.find("torsion = 1/(t - 2)") != std::string::npos);
  auto over_q = run({"chain-torsion", sample("step_t_minus_2.cplx"), "--field", "Q"});
  CHECK(over_q.code == 1);
  auto twist = run({"mapping-torus", sample("boundary_twist_g1.aut")});
  CHECK(twist.code == 0);
  CHECK(twist.out.find("Delta = 1\n") != std::string::npos);
  CHECK(twist.out.find("fiber norm = 0") != std::string::npos);
  auto conj = run({"mapping-torus", sample("conjugation_a1_g1.aut")});
  CHECK(conj.code == 2);
  CHECK(conj.err.find("NotDivisible") != std::string::npos);
  // The naming style of the input is kept.
  auto fibered = run({"norm", "--poly", "t^2 - 2*t + 1", "--dir", "0 0 0 0 1"});
  CHECK(first_line(fibered.out) == "f = t^2 - 2*t + 1");
  auto indexed = run({"norm", "--poly", "t3 - 1", "--dir", "0 0 1"});
  CHECK(first_line(indexed.out) == "f = t3 - 1");
  auto norm = run({"norm", "--poly", "t^2 - t + 1", "--dir", "1"});
  CHECK(norm.out == "f = t^2 - t + 1\nnorm = 2\nnorm - 2|s| = 0\n");
  auto inv = run({"lens", "invariants", "5", "2"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("lambda(T,T) = ±2/5 mod 1") != std::string::npos);
  auto franz = run({"lens", "franz", "5"});
  CHECK(franz.out == "franz zero check (p = 5, B = 2): only the zero map\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"alexander", "/nonexistent/file.pres"}).code == 1);
  CHECK(run({"alexander", "-"}, "gens: x\nrel: y\n").code == 1);
  CHECK(run({"fox", "--gens", "x", "--word", "x", "--wrt", "q"}).code == 1);
  CHECK(run({"lens", "invariants", "1", "0"}).code == 2);
  CHECK(run({"lens", "invariants", "4", "2"}).code == 1);
  CHECK(run({"lens", "franz", "14"}).code == 3);
  CHECK(run({"norm", "--poly", "t1 + t2", "--dir", "1"}).code == 1);
  CHECK(run({"norm", "--poly", "t", "--dir", "x"}).code == 1);
  auto ok = run({"lens", "franz", "5"});
  CHECK(ok.err.empty());
  auto err = run({"lens", "franz", "14"});
  CHECK(err.err.find('\n') == err.err.size() - 1);
  CHECK(cli::exit_code(Errc::RankObstruction) == 2);
  CHECK(cli::exit_code(Errc::Parse) == 1);
  CHECK(cli::exit_code(Errc::TooLarge) == 3);
}
