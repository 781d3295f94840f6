#include <doctest.h>

#include "abtor/io.hpp"
#include "abtor/norms.hpp"
#include "abtor/presentation.hpp"
#include "abtor/smith.hpp"
#include "generators.hpp"

using namespace abtor;

TEST_CASE("Newton polytopes") {
  CHECK(newton_polytope(parse_laurent("t^2 - t + 1", 1)).points() == std::set<Exponent>{{0}, {1}, {2}});
  CHECK(newton_polytope(parse_laurent("5", 1)).points() == std::set<Exponent>{{0}});
  auto p = newton_polytope(parse_laurent("t1^2*t2 + 3 - t2^-1", 2));
  CHECK(p.points() == std::set<Exponent>{{2, 1}, {0, 0}, {0, -1}});
  CHECK(p.vertices().size() == 3);
  auto square = newton_polytope(parse_laurent("1 + t1 + t2 + t1*t2 + 7*t1^0", 2));
  CHECK(square.vertices().size() == 4);
  CHECK(newton_polytope(parse_laurent("1 + t + t^3", 1)).vertices() == std::vector<Exponent>{{0}, {3}});
  CHECK_THROWS_AS(newton_polytope(parse_laurent("t1 + t2 + t3", 3)).vertices(), Error);
}

TEST_CASE("norms and spans") {
  for (int g = 1; g <= 4; ++g) {
    auto f = (parse_laurent("t - 1", 1)).pow(2 * g - 2);
    CHECK(alexander_norm(f, {1}) == 2 * g - 2);
  }
  CHECK(alexander_norm(parse_laurent("1", 2), {3, -4}) == 0);
  CHECK(alexander_norm(parse_laurent("t1^2*t2 + 3 - t2^-1", 2), {1, 0}) == 2);
  CHECK(alexander_norm(MultiLaurent(2), {1, 1}) == 0);
  CHECK(span(parse_laurent("t^2 - t + 1", 1), 0) == 2);
  CHECK(span(parse_laurent("7", 1), 0) == 0);
  CHECK(span(parse_laurent("(t - 1)^2", 1), 0) == 2);
  try {
    span(MultiLaurent(1), 0);
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroPolynomial);
  }
  CHECK_THROWS_AS(span(parse_laurent("t", 1), 1), Error);
  CHECK_THROWS_AS(alexander_norm(parse_laurent("t", 1), {1, 2}), Error);
}

TEST_CASE("homogeneity and additivity") {
  using namespace abtor::testing;
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_nonzero_laurent(3), g = random_nonzero_laurent(3);
    std::vector<long> s{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
    long k = uniform(-4, 4);
    std::vector<long> ks{k * s[0], k * s[1], k * s[2]};
    CHECK(alexander_norm(f, ks) == (k < 0 ? -k : k) * alexander_norm(f, s));
    CHECK(alexander_norm(f * g, s) == alexander_norm(f, s) + alexander_norm(g, s));
  }
}

TEST_CASE("trefoil: span + 2 equals a cokernel dimension with (t-1)^2 bookkeeping") {
  std::vector<std::string> g{"x", "y"};
  Presentation p(g, {parse_word("x y x y^-1 x^-1 y^-1", g)});
  auto a = alexander_matrix(p);
  auto delta = alexander_polynomial(p);
  // Extend the 1x2 Alexander matrix by the relation (t-1)^2 e_x, then read
  // dim_Q of the cokernel over Q[t^+-1] off the Smith form.
  Matrix<QPoly> m(2, 2, QPoly());
  auto to_q = [](const MultiLaurent& f) {
    QPoly out;
    for (const auto& [e, c] : f.terms()) out += QPoly::monomial(Rational(c), e[0] + 4);
    return out;
  };
  m(0, 0) = to_q(a.entries(0, 0));
  m(0, 1) = to_q(a.entries(0, 1));
  m(1, 0) = to_q(parse_laurent("(t - 1)^2", 1));
  std::size_t dim = 0;
  for (const auto& f : invariant_factors(m)) {
    REQUIRE_FALSE(f.is_zero());
    dim += static_cast<std::size_t>(f.degree() - f.valuation());
  }
  CHECK(dim == 4);
  CHECK(span(delta.rep(), 0) + 2 == static_cast<long>(dim));
}
