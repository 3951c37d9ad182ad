#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kahler/parse.hpp"
#include "kahler/samples.hpp"

using namespace kahler;

namespace {
const ContextPtr& cxy() {
  static ContextPtr c = make_context({"x", "y"});
  return c;
}
}  // namespace

TEST_CASE("polynomial grammar basics") {
  const auto& c = cxy();
  const Poly x = Poly::variable(c, std::size_t{0});
  const Poly y = Poly::variable(c, 1);
  CHECK(parse_poly("3/2*x^2*y - y + 1", c) ==
        (x * x * y).scaled(Scalar::from_fraction(c->field(), 3, 2)) - y +
            Poly::constant(c, 1));
  CHECK(parse_poly("x", c) == x);
  CHECK(parse_poly("0", c) == Poly::zero(c));
  CHECK(parse_poly("-x + x", c) == Poly::zero(c));
  CHECK(parse_poly("7", c) == Poly::constant(c, 7));
  CHECK(parse_poly("-3/4", c) ==
        Poly::constant(c, Scalar::from_fraction(c->field(), -3, 4)));
  CHECK(parse_poly("x^0", c) == Poly::constant(c, 1));
  CHECK(parse_poly("x^2*x", c) == x.pow(3));
}

TEST_CASE("implicit multiplication and whitespace") {
  const auto& c = cxy();
  const Poly x = Poly::variable(c, std::size_t{0});
  const Poly y = Poly::variable(c, 1);
  CHECK(parse_poly("2x", c) == x.scaled(Scalar::from_int(c->field(), 2)));
  CHECK(parse_poly("2 x y", c) ==
        (x * y).scaled(Scalar::from_int(c->field(), 2)));
  CHECK(parse_poly("x y^2", c) == x * y * y);
  CHECK(parse_poly("  x  +  y ", c) == x + y);
  CHECK(parse_poly("x*2", c) == parse_poly("2*x", c));
  CHECK(parse_poly("+x", c) == x);
}

TEST_CASE("parse errors carry positions") {
  const auto& c = cxy();
  CHECK_THROWS_AS(parse_poly("x + z", c), ParseError);
  try {
    parse_poly("x + z", c);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("unknown variable 'z'") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("", c), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", c), ParseError);
  CHECK_THROWS_AS(parse_poly("x ^ y", c), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y", c), ParseError);  // '/' needs integers
  CHECK_THROWS_AS(parse_poly("1/0", c), ParseError);
  CHECK_THROWS_AS(parse_poly("x y $", c), ParseError);
  CHECK_THROWS_AS(parse_poly("(x)", c), ParseError);  // no parens in polys
  CHECK_THROWS_AS(parse_poly("x x 3 3", c), ParseError);  // int after ident
  // over Z/5 the literal 1/5 has a vanishing denominator
  const auto c5 =
      make_context({"x"}, MonomialOrder::degrevlex, Field::prime(5));
  CHECK_THROWS_AS(parse_poly("1/5*x", c5), ParseError);
  CHECK(parse_poly("1/2*x", c5) ==
        Poly::variable(c5, std::size_t{0})
            .scaled(Scalar::from_int(Field::prime(5), 3)));
}

TEST_CASE("print-parse round trip") {
  for (const Field f : {Field::rationals(), Field::prime(7)}) {
    for (auto ord : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
      const auto c = make_context({"x", "y", "z"}, ord, f);
      Sampler s(23);
      for (int it = 0; it < 80; ++it) {
        const Poly p = s.poly(c, 5);
        CHECK(parse_poly(p.to_string(), c) == p);
      }
    }
  }
}

TEST_CASE("algebra declarations") {
  const auto a = parse_algebra_decl(
      "algebra circle { vars: x, y; relations: x^2 + y^2 - 1; }",
      MonomialOrder::degrevlex, Field::rationals());
  CHECK(a.name == "circle");
  CHECK(a.ctx->vars() == std::vector<std::string>{"x", "y"});
  REQUIRE(a.relations.size() == 1);
  CHECK(a.relations[0].to_string() == "x^2 + y^2 - 1");

  const auto free = parse_algebra_decl("algebra free { vars: x, y; }",
                                       MonomialOrder::degrevlex,
                                       Field::rationals());
  CHECK(free.relations.empty());

  const auto base = parse_algebra_decl(
      "algebra k { vars: ; }", MonomialOrder::degrevlex, Field::rationals());
  CHECK(base.ctx->nvars() == 0);

  const auto multi = parse_algebra_decl(
      "algebra two { vars: x, y; relations: x^2, y^3 - x; }",
      MonomialOrder::degrevlex, Field::rationals());
  CHECK(multi.relations.size() == 2);

  CHECK_THROWS_AS(parse_algebra_decl("algebra a { vars: x, x; }",
                                     MonomialOrder::degrevlex,
                                     Field::rationals()),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_decl("algebra a { vars: x; } trailing",
                                     MonomialOrder::degrevlex,
                                     Field::rationals()),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_decl("algebra a { relations: x; }",
                                     MonomialOrder::degrevlex,
                                     Field::rationals()),
                  ParseError);
}

TEST_CASE("module declarations") {
  const auto a = parse_algebra_decl(
      "algebra circle { vars: x, y; relations: x^2 + y^2 - 1; }",
      MonomialOrder::degrevlex, Field::rationals());
  const auto m = parse_module_decl(
      "module omega over circle { rank: 2; relations: (2x, 2y); }", a.ctx);
  CHECK(m.name == "omega");
  CHECK(m.over == "circle");
  CHECK(m.rank == 2);
  REQUIRE(m.rows.size() == 1);
  CHECK(m.rows[0][0].to_string() == "2*x");
  CHECK(m.rows[0][1].to_string() == "2*y");

  const auto free = parse_module_decl("module f over circle { rank: 3; }",
                                      a.ctx);
  CHECK(free.rank == 3);
  CHECK(free.rows.empty());

  const auto multi = parse_module_decl(
      "module m over circle { rank: 2; relations: (x, 0), (0, y), (1, 1); }",
      a.ctx);
  CHECK(multi.rows.size() == 3);

  CHECK_THROWS_AS(
      parse_module_decl("module m over a { rank: 2; relations: (x); }",
                        a.ctx),
      ParseError);
  CHECK_THROWS_AS(
      parse_module_decl("module m over a { relations: (x); }", a.ctx),
      ParseError);
}

TEST_CASE("tuple parsing for CLI arguments") {
  const auto& c = cxy();
  const Poly x = Poly::variable(c, std::size_t{0});
  const auto row = parse_poly_tuple("(2*x, 0, x + y)", c);
  REQUIRE(row.size() == 3);
  CHECK(row[0] == x.scaled(Scalar::from_int(c->field(), 2)));
  CHECK(parse_poly_tuple("x^2", c).size() == 1);
  CHECK(parse_poly_tuple("()", c).empty());
  CHECK_THROWS_AS(parse_poly_tuple("(x,", c), ParseError);
}
