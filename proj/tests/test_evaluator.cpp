#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracle/hp_series.hpp"
#include "pellucas/analysis.hpp"
#include "pellucas/errors.hpp"
#include "pellucas/evaluator.hpp"

using namespace pellucas;

namespace {

double oracle_distance(const Complex& v, const oracle::HPComplex& ref) {
  const oracle::HPComplex d{oracle::HP(v.real()) - ref.re, oracle::HP(v.imag()) - ref.im};
  return d.abs_double();
}

// target_tol is absolute; for small values tighten it to a relative one.
EvalResult eval_relative(const ComplexPoint& z, Weight m) {
  const auto r = eval_series(z, m);
  if (r.tail_bound <= 1e-12 * std::abs(r.value)) return r;
  EvalSettings s;
  s.target_tol = 1e-12 * std::abs(r.value);
  return eval_series(z, m, s);
}

}  // namespace

TEST_CASE("term_value examples") {
  const Complex t = term_value(1, ComplexPoint(0, 1), Weight(2));
  CHECK(t.real() == doctest::Approx(0.0));
  CHECK(t.imag() == doctest::Approx(-0.125));
  CHECK(term_value(2, ComplexPoint(0, 0), Weight(2)) == Complex(0.25, 0));
  for (int m : {2, 3, 7}) CHECK_THROWS_AS(term_value(0, ComplexPoint(1, 0), Weight(m)), PoleProximity);
  try {
    term_value(0, ComplexPoint(1, 0), Weight(2));
  } catch (const PoleProximity& e) {
    CHECK(e.index() == 0);
    CHECK(e.distance() == 0.0);
  }
}

TEST_CASE("weight and settings validation") {
  CHECK_THROWS_AS(Weight(1), std::invalid_argument);
  CHECK_THROWS_AS(ComplexPoint(std::nan(""), 0), std::invalid_argument);
  CHECK_THROWS_AS(ComplexPoint(0, INFINITY), std::invalid_argument);
  EvalSettings s;
  s.max_half_width = 3;
  CHECK_THROWS_AS(eval_series(ComplexPoint(0, 1), Weight(2), s), std::invalid_argument);
  s = {};
  s.target_tol = 0;
  CHECK_THROWS_AS(eval_series(ComplexPoint(0, 1), Weight(2), s), std::invalid_argument);
  s = {};
  s.pole_guard = -1;
  CHECK_THROWS_AS(eval_series(ComplexPoint(0, 1), Weight(2), s), std::invalid_argument);
}

TEST_CASE("eval_series at z=i matches the brute-force oracle") {
  const auto ref = oracle::brute_force(0, 1, 2, 120);
  const auto r = eval_series(ComplexPoint(0, 1), Weight(2));
  CHECK(r.tail_bound <= 1e-12);
  CHECK(oracle_distance(r.value, ref.total) <= 1e-12);
  CHECK(r.value == r.minus_part + r.plus_part);
}

TEST_CASE("eval_series rejects poles") {
  CHECK_THROWS_AS(eval_series(ComplexPoint(1, 0), Weight(2)), PoleProximity);
  CHECK_THROWS_AS(eval_series(ComplexPoint(-1, 0), Weight(4)), PoleProximity);
  CHECK_THROWS_AS(eval_series(ComplexPoint(3, 0), Weight(2)), PoleProximity);
}

TEST_CASE("eval_series does not converge on the accumulation points") {
  const auto [lower, upper] = accumulation_points();
  for (double a : {lower, upper}) {
    try {
      eval_series(ComplexPoint(a, 0), Weight(2));
      FAIL("expected DidNotConverge");
    } catch (const DidNotConverge& e) {
      CHECK(e.tail_bound() == std::numeric_limits<double>::max());
      CHECK(e.half_width() == kDefaultMaxHalfWidth);
    }
  }
}

TEST_CASE("doubling the window moves the value by less than the tail bound") {
  const ComplexPoint z(2, 2);
  const Weight m(4);
  const auto r = eval_series(z, m);
  Complex wide = term_value(0, z, m);
  for (std::int64_t a = 1; a <= 2 * r.terms_used; ++a)
    wide += term_value(a, z, m) + term_value(-a, z, m);
  CHECK(std::isfinite(r.value.real()));
  CHECK(std::abs(wide - r.value) <= r.tail_bound + 1e-15 * std::abs(r.value));
}

TEST_CASE("tail bound decreases geometrically") {
  const ComplexPoint z(0, 1);
  for (std::int64_t j = 2; j < 60; ++j)
    REQUIRE(tail_bound(j, z, Weight(2)) >= 4 * tail_bound(j + 1, z, Weight(2)));
  CHECK_THROWS_AS(tail_bound(1, z, Weight(2)), std::invalid_argument);
}

TEST_CASE("tail bound dominates the absolute tail at J=10") {
  const auto ref = oracle::brute_force(0, 1, 2, 200);
  const double bound = tail_bound(10, ComplexPoint(0, 1), Weight(2));
  CHECK(static_cast<double>(ref.abs_tail_from[10]) <= bound);
  // and it is not absurdly loose
  CHECK(bound < 100 * static_cast<double>(ref.abs_tail_from[10]));
}

TEST_CASE("tail bound is the MaxReal sentinel at an accumulation point") {
  const auto [lower, upper] = accumulation_points();
  for (int m : {2, 3, 8}) {
    CHECK(tail_bound(10, ComplexPoint(lower, 0), Weight(m)) == std::numeric_limits<double>::max());
    CHECK(tail_bound(10, ComplexPoint(upper, 0), Weight(m)) == std::numeric_limits<double>::max());
  }
}

TEST_CASE("oracle equivalence and tail soundness on random points") {
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> coord(-5, 5);
  int checked = 0;
  while (checked < 20) {
    const double re = coord(rng), im = coord(rng);
    if (std::abs(im) < 0.3 || std::hypot(re, im) > 5) continue;
    ++checked;
    for (int m : {2, 3, 4, 5, 6}) {
      CAPTURE(re);
      CAPTURE(im);
      CAPTURE(m);
      const auto ref = oracle::brute_force(re, im, m, 200);
      const auto r = eval_relative(ComplexPoint(re, im), Weight(m));
      CHECK(r.tail_bound <= 1e-12 * std::abs(r.value));
      const double rel = oracle_distance(r.value, ref.total) / ref.total.abs_double();
      CHECK(rel <= 1e-10);
      const oracle::HPComplex gap = ref.total - ref.partial[static_cast<std::size_t>(r.terms_used)];
      CHECK(gap.abs_double() <= r.tail_bound);
      CHECK(r.value == r.minus_part + r.plus_part);
    }
  }
}

TEST_CASE("terms decay at rate 2^-m") {
  const ComplexPoint z(0.7, 1.3);
  for (int m : {2, 4, 6}) {
    for (std::int64_t j = 3; j < 80; ++j) {
      const double up = std::abs(term_value(j + 1, z, Weight(m))) / std::abs(term_value(j, z, Weight(m)));
      const double down = std::abs(term_value(-j - 1, z, Weight(m))) / std::abs(term_value(-j, z, Weight(m)));
      REQUIRE(up <= std::exp2(-m) * 1.2);
      REQUIRE(down <= std::exp2(-m) * 1.2);
    }
  }
}

TEST_CASE("terms beyond double range vanish") {
  CHECK(term_value(2000, ComplexPoint(0, 1), Weight(2)) == Complex(0, 0));
  const auto [lower, upper] = accumulation_points();
  CHECK_THROWS_AS(term_value(2000, ComplexPoint(lower, 0), Weight(2)), PoleProximity);
  CHECK_THROWS_AS(term_value(-2000, ComplexPoint(upper, 0), Weight(2)), PoleProximity);
}

TEST_CASE("grid: single cell reproduces eval_series") {
  const auto g = eval_grid({-1, 0, 1, 2}, 1, 1, Weight(2));
  REQUIRE(g.size() == 1);
  CHECK(g[0].point == ComplexPoint(0, 1));
  const auto& r = std::get<EvalResult>(g[0].outcome);
  const auto direct = eval_series(ComplexPoint(0, 1), Weight(2));
  CHECK(r.value == direct.value);
  CHECK(r.terms_used == direct.terms_used);
}

TEST_CASE("grid over the upper strip has no failures") {
  const auto g = eval_grid({-3, 0.5, 3, 3.5}, 10, 10, Weight(2));
  REQUIRE(g.size() == 100);
  for (const auto& e : g) CHECK(std::holds_alternative<EvalResult>(e.outcome));
  // row-major, rows by increasing imaginary part
  CHECK(g[0].point.re() < g[1].point.re());
  CHECK(g[0].point.im() < g[10].point.im());
}

TEST_CASE("grid straddling the real axis") {
  // Even ny keeps the cell centres off the axis: z = 1 +- 0.001i is close to
  // the j=0 pole but outside the 1e-8 guard, so every cell evaluates.
  const auto even = eval_grid({-2, -0.01, 2, 0.01}, 10, 10, Weight(2));
  double largest = 0;
  for (const auto& e : even) {
    REQUIRE(std::holds_alternative<EvalResult>(e.outcome));
    largest = std::max(largest, std::abs(std::get<EvalResult>(e.outcome).value));
  }
  CHECK(largest > 1e5);
  // Odd ny puts a row on the axis, through the poles at -1 and 1.
  const auto odd = eval_grid({-2, -0.01, 2, 0.01}, 10, 11, Weight(2));
  int poles = 0;
  for (const auto& e : odd)
    if (const auto* f = std::get_if<GridFailure>(&e.outcome))
      poles += f->kind == ErrorKind::PoleProximity;
  CHECK(poles >= 2);
}

TEST_CASE("grid rejects degenerate regions") {
  CHECK_THROWS_AS(eval_grid({0, 0, 0, 1}, 2, 2, Weight(2)), InvalidRegion);
  CHECK_THROWS_AS(eval_grid({0, 1, 1, 0}, 2, 2, Weight(2)), InvalidRegion);
  CHECK_THROWS_AS(eval_grid({0, 0, 1, 1}, 0, 2, Weight(2)), InvalidRegion);
}

TEST_CASE("grid output is deterministic") {
  const auto a = eval_grid({-3, 0.5, 3, 3.5}, 30, 30, Weight(4));
  const auto b = eval_grid({-3, 0.5, 3, 3.5}, 30, 30, Weight(4));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    REQUIRE(std::get<EvalResult>(a[i].outcome).value == std::get<EvalResult>(b[i].outcome).value);
}
