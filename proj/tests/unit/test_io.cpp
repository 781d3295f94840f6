#include <doctest.h>

#include <sstream>

#include "abtor/io.hpp"
#include "generators.hpp"

using namespace abtor;

TEST_CASE("words") {
  std::vector<std::string> g{"x", "y"};
  CHECK(parse_word("x^3 y^-1", g) == Word(2, {1, 1, 1, -2}));
  CHECK(parse_word("1", g).is_identity());
  CHECK(parse_word("", g).is_identity());
  CHECK(parse_word("x x^-1 y", g) == Word(2, {2}));
  CHECK_THROWS_AS(parse_word("z", g), Error);
  CHECK_THROWS_AS(parse_word("x^a", g), Error);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = testing::random_word(2, 12);
    CHECK(parse_word(w.str(g), g) == w);
  }
}

TEST_CASE("group ring elements") {
  std::vector<std::string> g{"x", "y"};
  auto a = parse_group_ring("-1 + 2*x y - y^-1 x", g);
  CHECK(a.str(g) == "-1 + 2*x y - y^-1 x");
  CHECK(parse_group_ring("3", g) == GroupRingElem::constant(2, 3));
  for (int trial = 0; trial < 200; ++trial) {
    auto e = testing::random_group_ring(2, 4, 5);
    if (e.is_zero()) continue;
    CHECK(parse_group_ring(e.str(g), g) == e);
  }
}

TEST_CASE("Laurent expressions") {
  CHECK(parse_laurent("t^2 - t + 1").str() == "t^2 - t + 1");
  CHECK(parse_laurent("(t - 1)^2", 1) == parse_laurent("t^2 - 2*t + 1", 1));
  CHECK(parse_laurent("t^-1 * t", 1) == MultiLaurent::constant(1, 1));
  CHECK(parse_laurent("(t^2 - 1)/(t - 1)", 1) == parse_laurent("t + 1", 1));
  CHECK(parse_laurent("-3 + 2*t1*t2^-2").var_count() == 2);
  CHECK(parse_laurent("s1 - t").var_count() == 2);
  CHECK(parse_laurent("s3 * t").var_count() == 4);
  CHECK(parse_laurent("t", 3) == MultiLaurent::variable(3, 2));
  CHECK_THROWS_AS(parse_laurent("t + t1"), Error);
  CHECK_THROWS_AS(parse_laurent("t1 + s1", 3), Error);
  CHECK_THROWS_AS(parse_laurent("1/(t - 1)", 1), Error);
  CHECK_THROWS_AS(parse_laurent("t^100000000", 1), Error);
  CHECK_THROWS_AS(parse_laurent("t +", 1), Error);
  CHECK_THROWS_AS(parse_laurent("x", 1), Error);
  for (std::size_t vars = 1; vars <= 3; ++vars)
    for (int trial = 0; trial < 100; ++trial) {
      auto f = testing::random_laurent(vars);
      CHECK(parse_laurent(f.str(), vars) == f);
      CHECK(parse_laurent(f.str(laurent_names(vars, true)), vars) == f);
    }
}

TEST_CASE("field expressions") {
  CHECK(parse_rational_expr("1/2 + 1/3") == Rational(5, 6));
  CHECK(parse_rational_expr("(2/3)^-2") == Rational(9, 4));
  CHECK(parse_rational_function("1/(t-2)") == RationalFunction(Rational(1)) / (RationalFunction::t() - RationalFunction(Rational(2))));
  CyclotomicField k(5);
  CHECK(parse_cyclotomic("z^5", k) == k.one());
  CHECK(parse_cyclotomic("1 + z + z^2 + z^3 + z^4", k).is_zero());
  CHECK_THROWS_AS(parse_rational_expr("t"), Error);
  CHECK_THROWS_AS(parse_rational_expr("1/0"), Error);
}

TEST_CASE("presentation files") {
  std::istringstream in("# trefoil\ngens: x y\nrel: x y x y^-1 x^-1 y^-1  # braid relation\n\n");
  auto p = parse_presentation(in);
  CHECK(p.rank() == 2);
  CHECK(p.relators().size() == 1);
  std::istringstream bad("rel: x\n");
  CHECK_THROWS_AS(parse_presentation(bad), Error);
  std::istringstream unknown("gens: x\nrel: y\n");
  CHECK_THROWS_AS(parse_presentation(unknown), Error);
  std::istringstream garbage("gens: x\nfoo\n");
  CHECK_THROWS_AS(parse_presentation(garbage), Error);
}

TEST_CASE("chain complex files") {
  std::istringstream in(
      "field: Q(t)\n"
      "dims: 1 2 1\n"
      "boundary 2:\n"
      "  t-1\n"
      "  1-t\n"
      "boundary 1:\n"
      "  1 1\n");
  auto text = parse_chain_complex_text(in);
  CHECK(text.field.kind == FieldKind::RationalFunction);
  CHECK(text.dims == std::vector<std::size_t>{1, 2, 1});
  auto c = build_complex<RationalFunctionField>(text, RationalFunctionField{}, parse_rational_function);
  CHECK(c.boundary(2)(1, 0) == parse_rational_function("1 - t"));
  CHECK(c.is_acyclic());

  std::istringstream hom("field: Q\ndims: 1\nhomology 0:\n 2\n");
  auto ht = parse_chain_complex_text(hom);
  auto h = build_homology<RationalField>(ht, parse_rational_expr);
  REQUIRE(h.has_value());
  CHECK(h->bases[0][0][0] == Rational(2));

  CHECK(parse_field_spec("Q(zeta 7)").conductor == 7);
  CHECK(parse_field_spec("Q(zeta 7)").str() == "Q(zeta 7)");
  CHECK_THROWS_AS(parse_field_spec("R"), Error);
  std::istringstream rows("field: Q\ndims: 1 1\nboundary 1:\n 1 2\n");
  auto rt = parse_chain_complex_text(rows);
  CHECK_THROWS_AS(build_complex<RationalField>(rt, RationalField{}, parse_rational_expr), Error);
  std::istringstream missing("field: Q\ndims: 1 1\n");
  auto mt = parse_chain_complex_text(missing);
  CHECK_THROWS_AS(build_complex<RationalField>(mt, RationalField{}, parse_rational_expr), Error);
  std::istringstream degree("field: Q\ndims: 1 1\nboundary 2:\n 1\n");
  CHECK_THROWS_AS(parse_chain_complex_text(degree), Error);
}

TEST_CASE("automorphism files") {
  std::istringstream in("genus: 1\nimage a1: a1 b1 a1^-1 b1^-1 a1 b1 a1 b1^-1 a1^-1  # conjugate\n");
  auto f = parse_automorphism(in);
  CHECK(f.genus() == 1);
  CHECK(f.map().image(1) == Word::generator(2, 1));
  std::istringstream dup("genus: 1\nimage a1: a1\nimage a1: b1\n");
  CHECK_THROWS_AS(parse_automorphism(dup), Error);
  std::istringstream unknown("genus: 1\nimage a2: a1\n");
  CHECK_THROWS_AS(parse_automorphism(unknown), Error);
}
