#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kahler/poly.hpp"
#include "kahler/samples.hpp"
#include "test_support.hpp"

using namespace kahler;

namespace {

ContextPtr ctx2() { return make_context({"x", "y"}); }
ContextPtr ctx3() { return make_context({"x", "y", "z"}); }

Poly X(const ContextPtr& c) { return Poly::variable(c, std::size_t{0}); }
Poly Y(const ContextPtr& c) { return Poly::variable(c, 1); }

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

// ===== scalars ==============================================================

TEST_CASE("rational scalars are exact and canonical") {
  const Field q = Field::rationals();
  const Scalar a = Scalar::from_fraction(q, 1, 3);
  const Scalar b = Scalar::from_fraction(q, 1, 6);
  CHECK((a + b) == Scalar::from_fraction(q, 1, 2));
  CHECK((a + b).to_string() == "1/2");
  CHECK(Scalar::from_fraction(q, 2, 4).to_string() == "1/2");
  CHECK(Scalar::from_fraction(q, 3, -2).to_string() == "-3/2");
  CHECK(Scalar::from_int(q, -7).to_string() == "-7");
  CHECK((Scalar::from_int(q, 6) / Scalar::from_int(q, 4)).to_string() ==
        "3/2");
  CHECK(Scalar::from_fraction(q, 5, 7).inverse() ==
        Scalar::from_fraction(q, 7, 5));
  CHECK_THROWS_AS(Scalar::from_int(q, 1) / Scalar::zero(q),
                  ZeroDivisionError);
}

TEST_CASE("prime field scalars are canonical residues") {
  const Field f5 = Field::prime(5);
  CHECK(Scalar::from_int(f5, 3) * Scalar::from_int(f5, 4) ==
        Scalar::from_int(f5, 2));
  CHECK(Scalar::from_int(f5, -1) == Scalar::from_int(f5, 4));
  CHECK(Scalar::from_int(f5, 2).inverse() == Scalar::from_int(f5, 3));
  CHECK(Scalar::from_fraction(f5, 1, 2) == Scalar::from_int(f5, 3));
  CHECK(Scalar::from_int(f5, 7).to_string() == "2");
  CHECK_THROWS_AS(Scalar::from_fraction(f5, 1, 5), ZeroDivisionError);
  CHECK_THROWS_AS(Field::prime(6), ValidationError);
  CHECK_THROWS_AS(Field::prime(1), ValidationError);
  // large prime arithmetic stays in range
  const Field big = Field::prime(4294967291ULL);
  const Scalar x = Scalar::from_int(big, 4294967290LL);
  CHECK((x * x) == Scalar::one(big));  // (-1)^2
}

TEST_CASE("mixing fields is rejected") {
  const Scalar a = Scalar::from_int(Field::rationals(), 1);
  const Scalar b = Scalar::from_int(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, ContextError);
  CHECK(a != b);  // never equal, but comparable
}

// ===== monomials and orders =================================================

TEST_CASE("monomial arithmetic") {
  const Monomial a = mono({2, 0, 1});
  const Monomial b = mono({1, 1, 0});
  CHECK((a * b) == mono({3, 1, 1}));
  CHECK(a.degree() == 3);
  CHECK(b.divides(a * b));
  CHECK_FALSE(b.divides(a));
  CHECK((a * b).divided_by(a) == b);
  CHECK(Monomial::lcm(a, b) == mono({2, 1, 1}));
  CHECK(mono({1, 0, 0}).coprime(mono({0, 2, 1})));
  CHECK_FALSE(a.coprime(b));
}

TEST_CASE("lex order compares first difference") {
  // x > y^5 under lex even though the degree is smaller
  CHECK(compare(mono({1, 0}), mono({0, 5}), MonomialOrder::lex) > 0);
  CHECK(compare(mono({2, 1}), mono({2, 3}), MonomialOrder::lex) < 0);
  CHECK(compare(mono({2, 3}), mono({2, 3}), MonomialOrder::lex) == 0);
}

TEST_CASE("degrevlex order: degree first, then reverse-lex tie break") {
  // degree dominates
  CHECK(compare(mono({0, 5}), mono({1, 0}), MonomialOrder::degrevlex) > 0);
  // x^2 > x*y > y^2 among degree 2 in k[x, y]
  CHECK(compare(mono({2, 0}), mono({1, 1}), MonomialOrder::degrevlex) > 0);
  CHECK(compare(mono({1, 1}), mono({0, 2}), MonomialOrder::degrevlex) > 0);
  // the pair that separates degrevlex from graded lex: y^2 > x*z because
  // x*z has the larger exponent on the *last* variable
  CHECK(compare(mono({0, 2, 0}), mono({1, 0, 1}), MonomialOrder::degrevlex) >
        0);
}

TEST_CASE("orders are total, multiplicative, and have 1 minimal") {
  Sampler s(101);
  for (auto order : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
    for (int it = 0; it < 300; ++it) {
      const Monomial a = s.monomial(3, 5);
      const Monomial b = s.monomial(3, 5);
      const Monomial c = s.monomial(3, 5);
      const int ab = compare(a, b, order);
      // antisymmetry / totality
      CHECK(compare(b, a, order) == -ab);
      CHECK((ab == 0) == (a == b));
      // multiplicative
      CHECK(compare(a * c, b * c, order) == ab);
      // 1 minimal
      if (!a.is_one())
        CHECK(compare(a, Monomial(3), order) > 0);
      // transitivity spot check
      if (ab >= 0 && compare(b, c, order) >= 0)
        CHECK(compare(a, c, order) >= 0);
    }
  }
}

// ===== polynomial arithmetic ================================================

TEST_CASE("construction normalizes terms") {
  const auto c = ctx2();
  const Field q = c->field();
  // x + x - 2x = 0
  const Poly p = Poly::from_terms(
      c, {{mono({1, 0}), Scalar::one(q)},
          {mono({1, 0}), Scalar::one(q)},
          {mono({1, 0}), Scalar::from_int(q, -2)}});
  CHECK(p.is_zero());
  CHECK(p == Poly::zero(c));
  const Poly r = Poly::from_terms(c, {{mono({0, 1}), Scalar::one(q)},
                                      {mono({2, 0}), Scalar::one(q)}});
  CHECK(r.leading_monomial() == mono({2, 0}));
  CHECK(r.term_count() == 2);
}

TEST_CASE("addition and multiplication examples") {
  const auto c = ctx2();
  const Poly x = X(c), y = Y(c);
  CHECK((x * x + y) + (x - y) == x * x + x);
  CHECK((x + y) * (x + y) ==
        x * x + (x * y).scaled(Scalar::from_int(c->field(), 2)) + y * y);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(0) == Poly::constant(c, 1));
  CHECK((x + Poly::constant(c, 1)).degree() == 1);
  CHECK(Poly::zero(c).degree() == 0);
}

TEST_CASE("ring laws hold on random polynomials") {
  for (const Field f : {Field::rationals(), Field::prime(7)}) {
    const auto c = make_context({"x", "y", "z"}, MonomialOrder::degrevlex, f);
    Sampler s(7);
    for (int it = 0; it < 60; ++it) {
      const Poly p = s.poly(c, 4), q = s.poly(c, 4), r = s.poly(c, 4);
      CHECK(p + q == q + p);
      CHECK((p + q) + r == p + (q + r));
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p - p == Poly::zero(c));
      CHECK(p * Poly::constant(c, 1) == p);
      CHECK((p * Poly::zero(c)).is_zero());
    }
  }
}

// ===== derivatives ==========================================================

TEST_CASE("partial_derivative examples") {
  const auto c = ctx2();
  const Poly x = X(c), y = Y(c);
  CHECK((x * x * y + x).partial_derivative(0) ==
        (x * y).scaled(Scalar::from_int(c->field(), 2)) +
            Poly::constant(c, 1));
  CHECK((x * x * y + x).partial_derivative(1) == x * x);
  CHECK(Poly::constant(c, 5).partial_derivative(0).is_zero());
  CHECK_THROWS_AS(x.partial_derivative(2), IndexError);
}

TEST_CASE("derivative in characteristic p kills p-th powers") {
  const auto c =
      make_context({"x"}, MonomialOrder::degrevlex, Field::prime(5));
  const Poly x = Poly::variable(c, std::size_t{0});
  CHECK(x.pow(5).partial_derivative(0).is_zero());
  CHECK(x.pow(6).partial_derivative(0) == x.pow(5));
}

TEST_CASE("derivative agrees with Leibniz-recursion and shift oracles") {
  for (const Field f : {Field::rationals(), Field::prime(5)}) {
    const auto c = make_context({"x", "y", "z"}, MonomialOrder::degrevlex, f);
    Sampler s(11);
    for (int it = 0; it < 40; ++it) {
      const Poly p = s.poly(c, 5);
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(p.partial_derivative(i) == testing::leibniz_derivative(p, i));
        CHECK(p.partial_derivative(i) ==
              testing::shift_extract_derivative(p, i));
      }
    }
  }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  const auto c = ctx3();
  Sampler s(13);
  for (int it = 0; it < 50; ++it) {
    const Poly p = s.poly(c, 4), q = s.poly(c, 4);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK((p * q).partial_derivative(i) ==
            p.partial_derivative(i) * q + p * q.partial_derivative(i));
  }
}

// ===== substitution and evaluation ==========================================

TEST_CASE("substitute examples") {
  const auto c1 = make_context({"x"});
  const auto cy = make_context({"y"});
  const Poly x = Poly::variable(c1, std::size_t{0});
  const Poly y = Poly::variable(cy, std::size_t{0});
  // x := y + 1 in x^2 gives y^2 + 2y + 1
  CHECK((x * x).substitute({y + Poly::constant(cy, 1)}) ==
        y * y + y.scaled(Scalar::from_int(cy->field(), 2)) +
            Poly::constant(cy, 1));
  // substitution can change the number of variables
  const auto c2 = ctx2();
  CHECK((x * x + x).substitute({X(c2) + Y(c2)}) ==
        (X(c2) + Y(c2)) * (X(c2) + Y(c2)) + X(c2) + Y(c2));
  CHECK_THROWS_AS((x * x).substitute({}), ArityError);
}

TEST_CASE("substitute is a ring homomorphism") {
  const auto c = ctx2();
  const auto d = ctx3();
  Sampler s(17);
  for (int it = 0; it < 40; ++it) {
    const Poly p = s.poly(c, 3), q = s.poly(c, 3);
    const std::vector<Poly> images{s.poly(d, 2), s.poly(d, 2)};
    CHECK((p + q).substitute(images) ==
          p.substitute(images) + q.substitute(images));
    CHECK((p * q).substitute(images) ==
          p.substitute(images) * q.substitute(images));
  }
  CHECK(Poly::constant(c, 7).substitute({X(d), Y(d)}) ==
        Poly::constant(d, 7));
}

TEST_CASE("evaluation at points and in generic rings") {
  const auto c = make_context({"x"});
  const Field q = c->field();
  const Poly x = Poly::variable(c, std::size_t{0});
  CHECK(eval_at(x * x + Poly::constant(c, 1), {Scalar::from_int(q, 2)}) ==
        Scalar::from_int(q, 5));
  CHECK_THROWS_AS(eval_at(x, {}), ArityError);
  // zero-variable context: the empty evaluation of a constant is itself
  const auto c0 = make_context({});
  CHECK(eval_poly(Poly::constant(c0, 1), {}, ScalarRing{q}) ==
        Scalar::one(q));
  // eval via PolyRing is substitution
  const auto d = ctx2();
  CHECK(eval_poly(x * x, {X(d) + Y(d)}, PolyRing{d}) ==
        (X(d) + Y(d)) * (X(d) + Y(d)));
}

// ===== printing =============================================================

TEST_CASE("canonical printing") {
  const auto c = ctx2();
  const Field q = c->field();
  const Poly x = X(c), y = Y(c);
  const Poly p = (x * x * y).scaled(Scalar::from_fraction(q, 3, 2)) - y +
                 Poly::constant(c, 1);
  CHECK(p.to_string() == "3/2*x^2*y - y + 1");
  CHECK(Poly::zero(c).to_string() == "0");
  CHECK((-x).to_string() == "-x");
  CHECK((y - x).to_string() == "-x + y");  // degrevlex: x > y at degree 1
  CHECK((x.pow(3)).to_string() == "x^3");
  CHECK((x * y).scaled(Scalar::from_int(q, -1)).to_string() == "-x*y");
  CHECK(Poly::constant(c, -2).to_string() == "-2");

  const auto cp =
      make_context({"x", "y"}, MonomialOrder::degrevlex, Field::prime(5));
  const Poly px = Poly::variable(cp, std::size_t{0});
  // no negative residues are ever printed mod p
  CHECK((-px + Poly::constant(cp, 3)).to_string() == "4*x + 3");
}

TEST_CASE("printing respects the context's monomial order") {
  const auto cl = make_context({"x", "y"}, MonomialOrder::lex);
  const Poly x = X(cl), y = Y(cl);
  CHECK((y.pow(5) + x).to_string() == "x + y^5");
  const auto cd = ctx2();
  CHECK((Y(cd).pow(5) + X(cd)).to_string() == "y^5 + x");
}

// ===== contexts =============================================================

TEST_CASE("context rules") {
  CHECK_THROWS_AS(make_context({"x", "x"}), ContextError);
  CHECK_THROWS_AS(make_context({"3x"}), ValidationError);
  const auto a = ctx2();
  const auto b = ctx2();
  CHECK(same_context(a, b));  // structural equality across instances
  const auto c = make_context({"x", "y"}, MonomialOrder::lex);
  CHECK_FALSE(same_context(a, c));
  CHECK_THROWS_AS(X(a) + X(c), ContextError);
  const auto fp = make_context({"x", "y"}, MonomialOrder::degrevlex,
                               Field::prime(5));
  CHECK_THROWS_AS(X(a) * X(fp), ContextError);
  CHECK_THROWS_AS(Poly::variable(a, 2), IndexError);
  CHECK(a->index_of("y") == std::size_t{1});
  CHECK_FALSE(a->index_of("t").has_value());
}
