#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bclab/classify.hpp"
#include "bclab/factor.hpp"
#include "bclab/field.hpp"
#include "bclab/roots.hpp"
#include "doctest.h"

using namespace bclab;

static IntPoly P(const std::vector<long>& c) { return IntPoly::from_ints(c); }

TEST_CASE("polynomial arithmetic basics") {
  IntPoly a = P({-1, -1, 1});  // x^2 - x - 1
  IntPoly b = P({1, 1});       // x + 1
  CHECK((a * b) == P({-1, -2, 0, 1}));
  CHECK((a + b) == P({0, 0, 1}));
  CHECK(a.eval(BigRat(2)) == BigRat(1));
  CHECK(a.derivative() == P({-1, 2}));
  CHECK(IntPoly::divide_exact(a * b, b) == a);
  CHECK(IntPoly::divides(b, a * b));
  CHECK_FALSE(IntPoly::divides(a, b));
  CHECK(P({2, 4, 6}).content() == 2);
  CHECK(P({0, 0, -3}).primitive_part() == P({0, 0, 1}));
}

TEST_CASE("polynomial parse and print round trip") {
  IntPoly p = IntPoly::parse("x^5-x^4-x^2-x-1");
  CHECK(p == P({-1, -1, -1, 0, -1, 1}));
  CHECK(p.to_string() == "x^5-x^4-x^2-x-1");
  CHECK(IntPoly::parse(p.to_coeff_list()) == p);
  CHECK(IntPoly::parse("[ -1, -1, 1 ]") == P({-1, -1, 1}));
  CHECK(IntPoly::parse("2t^3+2t^2-1") == P({-1, 0, 2, 2}));
  CHECK_THROWS_AS(IntPoly::parse("x+y"), std::invalid_argument);
}

TEST_CASE("gcd and squarefree part") {
  IntPoly a = P({-1, -1, 1});
  IntPoly sq = a * a;
  CHECK(IntPoly::gcd(sq, sq.derivative()) == a);
  CHECK(sq.squarefree_part() == a);
  CHECK(IntPoly::gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
}

TEST_CASE("root isolation finds the documented roots") {
  // golden ratio in (1,2)
  auto r = isolate_real_roots(P({-1, -1, 1}), BigRat(1), BigRat(2));
  REQUIRE(r.size() == 1);
  RatInterval iv = refine_root(P({-1, -1, 1}), r[0], BigRat(1, 1 << 20));
  double x = to_double(iv.mid());
  CHECK(x == doctest::Approx(1.6180339887).epsilon(1e-6));

  // x^3 - 2x^2 + x - 1 has one root in (1,2), near 1.7549
  auto r2 = isolate_real_roots(IntPoly::parse("x^3-2x^2+x-1"), BigRat(1), BigRat(2));
  REQUIRE(r2.size() == 1);
  auto a2 = AlgebraicNumber::select_root(IntPoly::parse("x^3-2x^2+x-1"), r2[0]);
  CHECK(a2.to_double() == doctest::Approx(1.7549).epsilon(1e-4));

  // no real roots
  CHECK(isolate_real_roots(P({1, 0, 1}), BigRat(-10), BigRat(10)).empty());

  // rational root hit exactly
  auto r3 = isolate_real_roots(P({-6, 11, -6, 1}));  // (x-1)(x-2)(x-3)
  REQUIRE(r3.size() == 3);
  CHECK(r3[0].contains(BigRat(1)));
  CHECK(r3[1].contains(BigRat(2)));
  CHECK(r3[2].contains(BigRat(3)));
}

TEST_CASE("root isolation counts repeated and clustered roots once") {
  IntPoly a = P({-1, -1, 1});
  auto r = isolate_real_roots(a * a);
  CHECK(r.size() == 2);
}

TEST_CASE("algebraic number comparison and reciprocal") {
  auto tau = named_parameter(NamedKind::multinacci, 2);
  CHECK(tau.to_double() == doctest::Approx(1.61803398875).epsilon(1e-9));
  CHECK(tau.compare(BigRat(8, 5)) > 0);
  CHECK(tau.compare(BigRat(13, 8)) < 0);
  auto t2 = tau.reciprocal();
  CHECK(t2.to_double() == doctest::Approx(0.61803398875).epsilon(1e-9));
  CHECK(t2.minpoly() == P({-1, 1, 1}));
  CHECK(tau == tau.refined(BigRat(1, 1 << 30)));

  auto phi2 = named_parameter(NamedKind::doubling, 2);
  CHECK(phi2.to_double() == doctest::Approx(1.7549).epsilon(1e-4));
  CHECK(phi2.reciprocal().to_double() == doctest::Approx(0.5698).epsilon(1e-4));

  auto tau3 = named_parameter(NamedKind::multinacci, 3);
  CHECK(tau3.to_double() == doctest::Approx(1.8393).epsilon(1e-4));
  CHECK(tau3.reciprocal().to_double() == doctest::Approx(0.5437).epsilon(1e-4));

  CHECK_THROWS_AS(named_parameter(NamedKind::multinacci, 1), std::invalid_argument);
}

TEST_CASE("factorization reproduces the input exactly") {
  auto check_product = [](const IntPoly& p) {
    Factorization f = factor_full(p);
    IntPoly prod = IntPoly::constant(f.content);
    for (const auto& [fac, mult] : f.factors) {
      CHECK(fac.lc() > 0);
      CHECK(fac.content() == 1);
      for (int i = 0; i < mult; ++i) prod = prod * fac;
    }
    CHECK(prod == p);
  };
  check_product(P({-1, 0, 1}));                        // x^2 - 1
  check_product(P({-1, -1, 1}) * P({-1, -1, 1}));      // (x^2-x-1)^2
  check_product(P({0, 0, 2, 2}));                      // 2x^2(x+1)
  check_product(IntPoly::parse("t^8-t^7+t^5+t^4+t^2+t-1"));
  check_product(P({-6, 11, -6, 1}) * P({1, 0, 1}));
  // 1 - t^6 splits into four cyclotomic factors
  check_product(P({1, 0, 0, 0, 0, 0, -1}));
}

TEST_CASE("factorization structure matches known cases") {
  auto f1 = factor(P({-1, 0, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == P({-1, 1}));
  CHECK(f1[1].first == P({1, 1}));

  auto f2 = factor(IntPoly::parse("t^8-t^7+t^5+t^4+t^2+t-1"));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].second == 1);
  CHECK(f2[0].first.degree() == 8);
  CHECK(is_irreducible(IntPoly::parse("t^8-t^7+t^5+t^4+t^2+t-1")));

  auto f3 = factor(P({-1, -1, 1}) * P({-1, -1, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first == P({-1, -1, 1}));
  CHECK(f3[0].second == 2);

  CHECK_THROWS_AS(factor(IntPoly::monomial(65)), resource_error);
}

TEST_CASE("factorization randomized products") {
  std::mt19937 rng(12345);
  std::vector<IntPoly> pool = {
      P({-1, -1, 1}), P({1, 1}), P({-2, 1}), P({-1, 0, 1, 1}), P({1, -3, 1}),
      P({-1, -1, 0, 1}), P({3, 0, 1}),
  };
  for (int trial = 0; trial < 12; ++trial) {
    IntPoly prod = IntPoly::constant(1 + int(rng() % 3));
    int parts = 2 + int(rng() % 3);
    for (int i = 0; i < parts; ++i) prod = prod * pool[rng() % pool.size()];
    Factorization f = factor_full(prod);
    IntPoly re = IntPoly::constant(f.content);
    for (const auto& [fac, mult] : f.factors)
      for (int i = 0; i < mult; ++i) re = re * fac;
    CHECK(re == prod);
  }
}

TEST_CASE("classification of the documented parameters") {
  auto cls = [](const std::string& s) {
    IntPoly p = IntPoly::parse(s);
    auto roots = isolate_real_roots(p, BigRat(1), BigRat(2));
    REQUIRE(roots.size() == 1);
    return classify(AlgebraicNumber::select_root(p, roots[0]));
  };
  CHECK(cls("x^2-x-1").tag == NumberTag::pisot);
  CHECK(cls("x^3-2x^2+x-1").tag == NumberTag::pisot);
  CHECK(cls("x^5-x^4-x^3-1").tag == NumberTag::pisot);
  NumberClass perron = cls("x^5-x^4-x^2-x-1");
  CHECK(perron.tag == NumberTag::perron_strict);
  CHECK_FALSE(perron.is_pisot);
  CHECK(perron.is_weak_perron);
  NumberClass garsia = cls("x^3-2x-2");
  CHECK(garsia.tag == NumberTag::garsia);
  CHECK(garsia.is_perron);
  NumberClass plain = cls("x^7-x^5+x^3-x^2-1");
  CHECK(plain.tag == NumberTag::algebraic_integer_only);
  CHECK_FALSE(plain.is_weak_perron);
  CHECK(cls("x^4-x^3-2x^2+1").tag == NumberTag::pisot);

  // not an algebraic integer
  auto a32 = AlgebraicNumber::from_rational(BigRat(3, 2));
  CHECK(classify(a32).tag == NumberTag::not_integer);

  // weak Perron via x^k structure: x^4 - x^2 - 1 (conjugate -root)
  IntPoly w = IntPoly::parse("x^4-x^2-1");
  auto roots = isolate_real_roots(w, BigRat(1), BigRat(2));
  REQUIRE(roots.size() == 1);
  NumberClass weak = classify(AlgebraicNumber::select_root(w, roots[0]));
  CHECK(weak.tag == NumberTag::weak_perron_only);
  CHECK(weak.is_weak_perron);
  CHECK_FALSE(weak.is_perron);
}

TEST_CASE("classification is stable under interval refinement") {
  for (const char* s : {"x^2-x-1", "x^5-x^4-x^2-x-1", "x^3-2x-2"}) {
    IntPoly p = IntPoly::parse(s);
    auto roots = isolate_real_roots(p, BigRat(1), BigRat(2));
    REQUIRE(roots.size() == 1);
    AlgebraicNumber a = AlgebraicNumber::select_root(p, roots[0]);
    NumberClass coarse = classify(a);
    NumberClass fine = classify(a.refined(BigRat(1, BigInt(1) << 120)));
    CHECK(coarse.tag == fine.tag);
    CHECK(coarse.is_weak_perron == fine.is_weak_perron);
  }
}

TEST_CASE("classification flag monotonicity") {
  for (const char* s : {"x^2-x-1", "x^3-2x^2+x-1", "x^5-x^4-x^2-x-1", "x^3-2x-2",
                        "x^7-x^5+x^3-x^2-1", "x^4-x^3-2x^2+1", "x^4-x^2-1"}) {
    IntPoly p = IntPoly::parse(s);
    auto roots = isolate_real_roots(p, BigRat(1), BigRat(2));
    REQUIRE(!roots.empty());
    NumberClass nc = classify(AlgebraicNumber::select_root(p, roots.back()));
    if (nc.is_pisot) CHECK(nc.is_perron);
    if (nc.is_perron) CHECK(nc.is_weak_perron);
  }
}

TEST_CASE("salem detection via the reciprocal transform") {
  // Lehmer's polynomial: the smallest known Salem number ~1.17628
  IntPoly lehmer = IntPoly::parse("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  auto roots = isolate_real_roots(lehmer, BigRat(1), BigRat(2));
  REQUIRE(roots.size() == 1);
  NumberClass nc = classify(AlgebraicNumber::select_root(lehmer, roots[0]));
  CHECK(nc.tag == NumberTag::salem);
  CHECK(nc.is_weak_perron);
  CHECK(unit_circle_pairs(lehmer) == 4);
}

TEST_CASE("field arithmetic in Q(tau)") {
  auto tau = named_parameter(NamedKind::multinacci, 2);
  auto fld = NumberField::make(tau);
  FieldElement b = fld->beta();
  // tau^2 = tau + 1
  CHECK(b * b == b + BigRat(1));
  CHECK((b * b).coords() == std::vector<BigRat>{BigRat(1), BigRat(1)});
  // 2 tau = 3.236...: sign decisions on both sides of nearby rationals
  FieldElement e = BigRat(2) * b + BigRat(-3);
  CHECK(e.sign() > 0);
  CHECK((BigRat(2) * b + BigRat(-13, 4)).sign() < 0);
  CHECK((b * b - b - BigRat(1)).sign() == 0);
  // (18 - 3 tau)/29 vs 1/2: less
  FieldElement x = BigRat(1, 29) * (fld->from_rational(BigRat(18)) - BigRat(3) * b);
  CHECK(x.compare(BigRat(1, 2)) < 0);
  // inverse
  CHECK(b * b.inverse() == fld->one());
  CHECK(b.inverse() == b - BigRat(1));  // 1/tau = tau - 1
  CHECK_THROWS_AS(fld->zero().inverse(), std::domain_error);
  // enclosure agrees with double
  CHECK(x.to_double() == doctest::Approx((18 - 3 * 1.61803398875) / 29).epsilon(1e-9));
}

TEST_CASE("field compare agrees with double when the gap is visible") {
  auto tau = named_parameter(NamedKind::multinacci, 2);
  auto fld = NumberField::make(tau);
  std::mt19937 rng(99);
  double td = tau.to_double();
  for (int i = 0; i < 50; ++i) {
    long a0 = long(rng() % 41) - 20, a1 = long(rng() % 41) - 20;
    long b0 = long(rng() % 41) - 20, b1 = long(rng() % 41) - 20;
    FieldElement u = fld->from_rational(BigRat(a0)) + BigRat(a1) * fld->beta();
    FieldElement v = fld->from_rational(BigRat(b0)) + BigRat(b1) * fld->beta();
    double du = a0 + a1 * td, dv = b0 + b1 * td;
    if (std::abs(du - dv) > 1e-9) {
      CHECK(u.compare(v) == (du < dv ? -1 : 1));
    }
  }
}

TEST_CASE("degree one field degenerates to rationals") {
  auto a = AlgebraicNumber::from_rational(BigRat(3, 2));
  auto fld = NumberField::make(a);
  FieldElement b = fld->beta();
  CHECK(b.rational_value() == BigRat(3, 2));
  CHECK((b * b).rational_value() == BigRat(9, 4));
  CHECK(fld->beta_inv().rational_value() == BigRat(2, 3));
}
