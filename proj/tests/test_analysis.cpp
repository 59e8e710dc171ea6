#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pellucas/analysis.hpp"
#include "pellucas/errors.hpp"
#include "pellucas/evaluator.hpp"
#include "pellucas/format.hpp"
#include "pellucas/sequence.hpp"

using namespace pellucas;

namespace {

// |p - (1 -+ sqrt 2)| in 1024-bit arithmetic.
class LimitDistance {
 public:
  explicit LimitDistance(bool upper) {
    mpfr_inits2(1024, limit_, tmp_, static_cast<mpfr_ptr>(nullptr));
    mpfr_sqrt_ui(limit_, 2, MPFR_RNDN);
    if (upper)
      mpfr_add_ui(limit_, limit_, 1, MPFR_RNDN);
    else
      mpfr_ui_sub(limit_, 1, limit_, MPFR_RNDN);
  }
  ~LimitDistance() { mpfr_clears(limit_, tmp_, static_cast<mpfr_ptr>(nullptr)); }
  LimitDistance(const LimitDistance&) = delete;
  LimitDistance& operator=(const LimitDistance&) = delete;

  // Sign of p - limit and |p - limit| (as a double, for logging).
  std::pair<int, double> operator()(const mpq_class& p) {
    mpfr_set_q(tmp_, p.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(tmp_, tmp_, limit_, MPFR_RNDN);
    const int s = mpfr_sgn(tmp_);
    mpfr_abs(tmp_, tmp_, MPFR_RNDN);
    return {s, mpfr_get_d(tmp_, MPFR_RNDN)};
  }
  int compare_abs(const mpq_class& p, const mpq_class& q) {
    mpfr_t a;
    mpfr_init2(a, 1024);
    mpfr_set_q(a, p.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(a, a, limit_, MPFR_RNDN);
    mpfr_set_q(tmp_, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(tmp_, tmp_, limit_, MPFR_RNDN);
    const int c = mpfr_cmpabs(a, tmp_);
    mpfr_clear(a);
    return c;
  }

 private:
  mpfr_t limit_, tmp_;
};

}  // namespace

TEST_CASE("poles near the origin") {
  const auto poles = poles_in_rect({-1.5, -0.1, 1.5, 0.1}, 4);
  std::vector<std::int64_t> idx;
  for (const auto& p : poles) idx.push_back(p.index);
  // sorted by location: -1, -3/7, -7/17, -1/3, 1
  CHECK(idx == std::vector<std::int64_t>{1, 3, 4, 2, 0});
  CHECK(poles[0].location == -1);
  CHECK(poles[1].location == mpq_class(-3, 7));
  CHECK(poles[2].location == mpq_class(-7, 17));
  CHECK(poles[3].location == mpq_class(-1, 3));
  CHECK(poles[4].location == 1);
}

TEST_CASE("no poles off the real axis") {
  CHECK(poles_in_rect({-10, 0.5, 10, 1}, 60).empty());
  CHECK(poles_in_rect({-10, -1, 10, -1e-300}, 60).empty());
}

TEST_CASE("poles approaching 1+sqrt2") {
  const auto poles = poles_in_rect({2.3, -0.1, 2.5, 0.1}, 12);
  std::vector<std::int64_t> idx;
  for (const auto& p : poles) {
    idx.push_back(p.index);
    CHECK(p.index <= -2);
  }
  CHECK(std::find(idx.begin(), idx.end(), -2) != idx.end());
  CHECK(std::find(idx.begin(), idx.end(), -3) != idx.end());
  CHECK(std::find(idx.begin(), idx.end(), -1) == idx.end());  // at 3
  CHECK(poles.size() == 11);
}

TEST_CASE("pole locations are exact zeros of their denominators") {
  for (const auto& p : poles_in_rect({-100, -1, 100, 1}, 60)) {
    const mpq_class residual = mpq_class(pell_lucas(p.index)) * p.location +
                               mpq_class(pell_lucas(p.index - 1));
    REQUIRE(residual == 0);
    REQUIRE(p.location_float == nearest_double(p.location));
  }
}

TEST_CASE("poles_in_rect validates its input") {
  CHECK_THROWS_AS(poles_in_rect({1, 0, 1, 1}, 4), InvalidRegion);
  CHECK_THROWS_AS(poles_in_rect({0, 0, 1, 1}, 0), std::invalid_argument);
}

TEST_CASE("accumulation points") {
  const auto [lower, upper] = accumulation_points();
  CHECK(lower == doctest::Approx(-0.41421356).epsilon(1e-8));
  CHECK(upper == doctest::Approx(2.41421356).epsilon(1e-8));
  CHECK(std::abs(lower * lower - 2 * lower - 1) < 1e-14);
  CHECK(std::abs(upper * upper - 2 * upper - 1) < 1e-14);
  CHECK(std::abs(pole_ratio(40).get_d() - lower) < 1e-12);
  CHECK(std::abs(pole_ratio(-40).get_d() - upper) < 1e-12);
}

TEST_CASE("pole locations alternate around their limit with shrinking distance") {
  // For j >= 2 the locations are the alternating convergents -Q_{j-1}/Q_j:
  // -1/3, -3/7, -7/17, ... They are not monotone, but their distance to the
  // limit strictly decreases.
  LimitDistance lower(false), upper(true);
  for (std::int64_t j = 2; j < 60; ++j) {
    const auto [s0, d0] = lower(pole_ratio(j));
    const auto [s1, d1] = lower(pole_ratio(j + 1));
    REQUIRE(s0 == -s1);
    REQUIRE(lower.compare_abs(pole_ratio(j + 1), pole_ratio(j)) < 0);
    REQUIRE(pole_ratio(j) >= mpq_class(-3, 7));
    REQUIRE(pole_ratio(j) <= mpq_class(-1, 3));
  }
  for (std::int64_t j = -1; j > -60; --j) {
    const auto [s0, d0] = upper(pole_ratio(j));
    const auto [s1, d1] = upper(pole_ratio(j - 1));
    REQUIRE(s0 == -s1);
    REQUIRE(upper.compare_abs(pole_ratio(j - 1), pole_ratio(j)) < 0);
  }
  CHECK(pole_ratio(3) < pole_ratio(4));  // -3/7 < -7/17
}

TEST_CASE("classify examples") {
  const auto at_one = classify(ComplexPoint(1, 0));
  CHECK(at_one.tag == DomainTag::Pole);
  CHECK(at_one.index == 0);
  CHECK(classify(ComplexPoint(0, 1)).tag == DomainTag::Regular);
  const auto [lower, upper] = accumulation_points();
  const auto acc = classify(ComplexPoint(lower, 0));
  CHECK(acc.tag == DomainTag::NearAccumulation);
  CHECK(acc.which == AccumulationPoint::Lower);
  CHECK(classify(ComplexPoint(upper, 0)).which == AccumulationPoint::Upper);
}

TEST_CASE("classify near poles") {
  const auto near = classify(ComplexPoint(1, 1e-9));
  CHECK(near.tag == DomainTag::NearPole);
  CHECK(near.index == 0);
  CHECK(near.distance == doctest::Approx(1e-9));
  CHECK(classify(ComplexPoint(-1.0 / 3.0, 0)).tag == DomainTag::Pole);
  CHECK(classify(ComplexPoint(-1.0 / 3.0, 0)).index == 2);
  // -17/41 lies 4e-4 from 1 - sqrt2: both thresholds trip, the pole is nearer.
  const double p5 = pole_ratio(5).get_d();
  const auto c = classify(ComplexPoint(p5, 1e-8));
  CHECK(c.tag == DomainTag::NearPole);
  CHECK(c.index == 5);
  // A point between the two, much closer to the accumulation point.
  const auto [lower, upper] = accumulation_points();
  CHECK(classify(ComplexPoint(lower, 1e-12)).tag == DomainTag::NearAccumulation);
  // Poles beyond the cap are ignored.
  ClassifySettings tight;
  tight.j_cap = 3;
  CHECK(classify(ComplexPoint(p5, 1e-8), tight).tag == DomainTag::NearAccumulation);
}

TEST_CASE("classify rejects bad tolerances") {
  ClassifySettings s;
  s.pole_tol = 0;
  CHECK_THROWS_AS(classify(ComplexPoint(0, 1), s), std::invalid_argument);
}

TEST_CASE("regular points evaluate") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(-4, 4), im(-0.5, 0.5);
  EvalSettings s;
  s.target_tol = 1e-8;
  int regular = 0;
  while (regular < 20) {
    const ComplexPoint z(re(rng), im(rng));
    if (classify(z).tag != DomainTag::Regular) continue;
    ++regular;
    CAPTURE(z.re());
    CAPTURE(z.im());
    CHECK_NOTHROW(eval_series(z, Weight(2), s));
  }
}
