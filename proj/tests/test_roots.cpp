#include "partpoly/float_roots.hpp"
#include "partpoly/poly_cache.hpp"
#include "partpoly/root_isolation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace partpoly;

namespace {

const PolyCache& shared_cache() {
  static PolyCache cache(120);
  return cache;
}

Poly from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

bool contains_value(const RootInterval& iv, const Rational& v) { return iv.lo < v && v < iv.hi; }

// true real roots classified from a float sweep
std::vector<double> float_real_roots(const std::vector<FloatRoot>& roots) {
  std::vector<double> out;
  for (const FloatRoot& r : roots)
    if (r.converged && std::abs(r.value.imag()) <= 1e-6) out.push_back(r.value.real());
  return out;
}

}  // namespace

TEST_CASE("squarefree part collapses repeated roots") {
  CHECK(squarefree_part(Poly::monomial(2, Rational(1))) == Poly::variable());
  // x(x-3)/2 is already squarefree; result is the primitive integer multiple
  CHECK(squarefree_part(bo_poly(shared_cache(), 1, 1)) == from_ints({0, -3, 1}));
  // (x+1)^2 (x-1) -> (x+1)(x-1)
  const Poly p = from_ints({1, 1}) * from_ints({1, 1}) * from_ints({-1, 1});
  CHECK(squarefree_part(p) == from_ints({-1, 0, 1}));
  CHECK(squarefree_part(Poly::constant(Rational(7))) == Poly::constant(Rational(1)));
  CHECK_THROWS_AS(squarefree_part(Poly()), std::invalid_argument);
}

TEST_CASE("isolation reports exact rational roots exactly") {
  const RootReport d1 = isolate_real_roots(delta(shared_cache(), 1));
  REQUIRE(d1.exact_roots.size() == 2);
  CHECK(d1.exact_roots[0] == -1);
  CHECK(d1.exact_roots[1] == 0);
  CHECK(d1.intervals.empty());

  const RootReport p11 = isolate_real_roots(bo_poly(shared_cache(), 1, 1));
  REQUIRE(p11.exact_roots.size() == 2);
  CHECK(p11.exact_roots[0] == 0);
  CHECK(p11.exact_roots[1] == 3);
  CHECK(p11.intervals.empty());
}

TEST_CASE("isolation brackets the irrational roots of Delta_2") {
  const Poly d2 = delta(shared_cache(), 2);
  const RootReport rep = isolate_real_roots(d2);
  REQUIRE(rep.exact_roots.size() == 1);
  CHECK(rep.exact_roots[0] == 0);
  REQUIRE(rep.intervals.size() == 2);
  // roots are -3 -+ sqrt(10); membership checked exactly via (t+3)^2 vs 10
  const RootInterval& neg = rep.intervals[0];
  const RootInterval& pos = rep.intervals[1];
  CHECK(neg.hi < -4);  // contains -3-sqrt(10) ~ -6.162
  CHECK((neg.lo + 3) * (neg.lo + 3) > 10);
  CHECK((neg.hi + 3) * (neg.hi + 3) < 10);
  CHECK(pos.lo >= 0);
  CHECK((pos.lo + 3) * (pos.lo + 3) < 10);
  CHECK((pos.hi + 3) * (pos.hi + 3) > 10);
}

TEST_CASE("interval endpoint signs are exact") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= a; ++b) {
      const Poly f = bo_poly(shared_cache(), a, b);
      const Poly sq = squarefree_part(f);
      for (const RootInterval& iv : isolate_real_roots(f).intervals) {
        REQUIRE(iv.sign_lo * iv.sign_hi == -1);
        CHECK(sgn(sq(iv.lo)) == iv.sign_lo);
        CHECK(sgn(sq(iv.hi)) == iv.sign_hi);
      }
    }
}

TEST_CASE("refine shrinks a bracket around an exact root") {
  const Poly f = bo_poly(shared_cache(), 1, 1);  // roots 0, 3
  RootInterval iv{make_rational(5, 2), make_rational(7, 2), -1, +1};
  const Rational eps = make_rational(1, 10000);
  const RootInterval out = refine(f, iv, eps);
  CHECK(out.width() <= eps);
  CHECK(out.lo < 3);
  CHECK(out.hi > 3);
}

TEST_CASE("refine reaches 1e-12 on the positive root of Delta_2") {
  const Poly d2 = delta(shared_cache(), 2);
  const RootReport rep = isolate_real_roots(d2);
  const Rational eps = make_rational(Int(1), pow10(12));
  const RootInterval out = refine(d2, rep.intervals.back(), eps);
  CHECK(out.width() <= eps);
  // sqrt(10) - 3 bracketed: compare squares exactly
  CHECK((out.lo + 3) * (out.lo + 3) < 10);
  CHECK((out.hi + 3) * (out.hi + 3) > 10);
  CHECK(to_double(out.midpoint()) == Catch::Approx(0.16227766016837933).epsilon(1e-11));
}

TEST_CASE("refinement is nested") {
  const Poly d2 = delta(shared_cache(), 2);
  RootInterval iv = isolate_real_roots(d2).intervals.back();
  Rational eps(make_rational(1, 16));
  for (int round = 0; round < 8; ++round) {
    const RootInterval next = refine(d2, iv, eps);
    CHECK(next.lo >= iv.lo);
    CHECK(next.hi <= iv.hi);
    CHECK(next.width() <= eps);
    iv = next;
    eps /= 16;
  }
}

TEST_CASE("refine rejects brackets without a sign change") {
  const Poly f = bo_poly(shared_cache(), 1, 1);
  RootInterval bad{Rational(4), Rational(5), -1, +1};
  CHECK_THROWS_AS(refine(f, bad, make_rational(1, 100)), std::invalid_argument);
  RootInterval empty{Rational(5), Rational(4), -1, +1};
  CHECK_THROWS_AS(refine(f, empty, make_rational(1, 100)), std::invalid_argument);
  RootInterval ok{make_rational(5, 2), make_rational(7, 2), -1, +1};
  CHECK_THROWS_AS(refine(f, ok, Rational(0)), std::invalid_argument);
}

TEST_CASE("largest positive real root") {
  const PolyCache& cache = shared_cache();
  const std::optional<Rational> x11 = largest_positive_real_root(bo_poly(cache, 1, 1));
  REQUIRE(x11.has_value());
  CHECK(*x11 == 3);  // exact
  const std::optional<Rational> x21 = largest_positive_real_root(bo_poly(cache, 2, 1));
  REQUIRE(x21.has_value());
  CHECK(*x21 == 2);  // exact root of x^2 - 4
  const std::optional<Rational> x22 = largest_positive_real_root(bo_poly(cache, 2, 2));
  REQUIRE(x22.has_value());
  // true root is exactly 7/5; the returned midpoint sits within 1e-12 of it
  Rational diff = *x22 - make_rational(7, 5);
  if (diff < 0) diff = -diff;
  CHECK(diff <= make_rational(Int(1), pow10(12)));
  const std::optional<Rational> x10 = largest_positive_real_root(bo_poly(cache, 10, 10));
  REQUIRE(x10.has_value());
  CHECK(to_fixed_decimal(*x10, 2) == "0.49");
  CHECK_FALSE(largest_positive_real_root(cache.poly(0)).has_value());
  // no positive roots at all: x + 1
  CHECK_FALSE(largest_positive_real_root(from_ints({1, 1})).has_value());
}

TEST_CASE("root counts above a point") {
  const Poly f = bo_poly(shared_cache(), 2, 1);  // x(x^2-4)/3
  CHECK(count_real_roots_above(f, 2) == 0);
  CHECK(count_real_roots_above(f, 1) == 1);
  CHECK(count_real_roots_above(f, -3) == 3);
  CHECK(count_real_roots(f) == 3);
  // high-variation case falls back to the exact chain: roots 1, 2, 3, 4
  const Poly g = from_ints({-1, 1}) * from_ints({-2, 1}) * from_ints({-3, 1}) * from_ints({-4, 1});
  CHECK(count_real_roots_above(g, 0) == 4);
  CHECK(count_real_roots_above(g, 2) == 2);
  CHECK(count_real_roots(g) == 4);
}

TEST_CASE("each product polynomial has exactly one positive real root") {
  const PolyCache& cache = shared_cache();
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= a; ++b) {
      const RootReport rep = isolate_real_roots(bo_poly(cache, a, b));
      long positives = 0;
      for (const Rational& r : rep.exact_roots)
        if (r > 0) ++positives;
      for (const RootInterval& iv : rep.intervals)
        if (iv.lo >= 0) ++positives;
      CHECK(positives == 1);
    }
}

TEST_CASE("chain polynomials keep a single positive root out to a = 100") {
  const PolyCache cache(101);
  for (int a = 1; a <= 100; ++a)
    CHECK(count_real_roots_above(bo_poly(cache, a, 1), 0) == 1);
}

TEST_CASE("chain polynomials have only real roots for small a") {
  const PolyCache& cache = shared_cache();
  for (int a = 1; a <= 30; ++a) {
    const Poly f = bo_poly(cache, a, 1);
    CHECK(count_real_roots(f) == f.degree());  // all roots real (observed range)
  }
}

TEST_CASE("float sweep on simple polynomials") {
  const std::vector<FloatRoot> quad = all_roots_float(from_ints({1, 0, 1}));  // x^2 + 1
  REQUIRE(quad.size() == 2);
  CHECK(quad[0].value.real() == Catch::Approx(0.0).margin(1e-9));
  CHECK(quad[0].value.imag() == Catch::Approx(-1.0).margin(1e-9));
  CHECK(quad[1].value.imag() == Catch::Approx(1.0).margin(1e-9));
  CHECK(quad[0].converged);
  CHECK(quad[0].residual < 1e-9);

  const std::vector<FloatRoot> d2 = all_roots_float(delta(shared_cache(), 2));
  REQUIRE(d2.size() == 3);
  CHECK(d2[0].value.real() == Catch::Approx(-6.16227766016838).margin(1e-9));
  CHECK(d2[1].value.real() == Catch::Approx(0.0).margin(1e-9));
  CHECK(d2[2].value.real() == Catch::Approx(0.16227766016838).margin(1e-9));

  CHECK_THROWS_AS(all_roots_float(Poly::constant(Rational(1))), std::invalid_argument);
}

TEST_CASE("float real roots land inside the exact isolating intervals") {
  const PolyCache& cache = shared_cache();
  const Rational tight = make_rational(Int(1), pow10(9));
  for (int n = 1; n <= 12; ++n) {
    const Poly dn = delta(cache, n);
    RootReport rep = isolate_real_roots(dn);
    for (RootInterval& iv : rep.intervals) iv = refine(dn, iv, tight);
    const std::vector<double> reals = float_real_roots(all_roots_float(dn));
    const std::size_t exact_count = rep.exact_roots.size() + rep.intervals.size();
    REQUIRE(reals.size() == exact_count);
    for (double r : reals) {
      bool matched = false;
      for (const Rational& e : rep.exact_roots)
        matched = matched || std::abs(r - to_double(e)) <= 1e-6;
      for (const RootInterval& iv : rep.intervals)
        matched = matched || (to_double(iv.lo) - 1e-6 <= r && r <= to_double(iv.hi) + 1e-6);
      CHECK(matched);
    }
  }
}
