#include <random>

#include "doctest.h"
#include "kds/motion.hpp"

using namespace kds;

namespace {

Polynomial from_roots(const std::vector<double>& roots) {
  Polynomial p{1.0};
  for (double r : roots) p = p * Polynomial{-r, 1.0};
  return p;
}

}  // namespace

TEST_CASE("horner evaluation") {
  CHECK(Polynomial{1, 2, 3}(2.0) == 17.0);
  CHECK(Polynomial{}(5.0) == 0.0);
  CHECK(Polynomial{-1, 0, 1}(1.0) == 0.0);
}

TEST_CASE("coefficient arithmetic is exact on integers") {
  CHECK(Polynomial{0, 1} * Polynomial{0, 1} == Polynomial{0, 0, 1});
  CHECK(Polynomial{3, 1} - Polynomial{3, 1} == Polynomial{});
  CHECK(Polynomial{1} + Polynomial{0, 2} == Polynomial{1, 2});
  Polynomial a{4, -7, 2}, b{-3, 5};
  CHECK((a * b)(3.0) == a(3.0) * b(3.0));
}

TEST_CASE("degree and zero conventions") {
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0.0, 0.0}.degree() == -1);
  CHECK(Polynomial{1, 0, 0}.degree() == 0);
  CHECK(Polynomial{0, 0, 5}.degree() == 2);
}

TEST_CASE("root isolation on fixed polynomials") {
  auto r1 = isolate_roots(Polynomial{-1, 0, 1}, {0, 3}, 1e-12);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == doctest::Approx(1.0).epsilon(1e-10));

  auto r2 = isolate_roots(from_roots({0.25, 0.75}), {0, 1});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(r2[1] == doctest::Approx(0.75).epsilon(1e-8));

  CHECK_THROWS_AS(isolate_roots(Polynomial{}, {0, 1}), IdenticallyZeroError);
}

TEST_CASE("seeded random roots are recovered") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> roots;
    for (int k = 0; k < 6; ++k) roots.push_back(u(rng));
    std::sort(roots.begin(), roots.end());
    bool spaced = true;
    for (size_t k = 1; k < roots.size(); ++k)
      if (roots[k] - roots[k - 1] < 1e-3) spaced = false;
    if (!spaced) continue;
    const Polynomial p = from_roots(roots);
    const auto got = isolate_roots(p, {0, 1}, 1e-10);
    REQUIRE(got.size() == roots.size());
    for (size_t k = 0; k < roots.size(); ++k)
      CHECK(got[k] == doctest::Approx(roots[k]).epsilon(1e-7));
    // consecutive-root stepping
    for (size_t k = 0; k + 1 < roots.size(); ++k) {
      auto next = first_root_after(p, got[k], 1.0);
      REQUIRE(next.has_value());
      CHECK(*next == doctest::Approx(roots[k + 1]).epsilon(1e-7));
    }
  }
}

TEST_CASE("first_root_after is strict at the current time") {
  const Polynomial p{-0.5, 1.0};  // t - 0.5
  auto a = first_root_after(p, 0.0, 1.0);
  REQUIRE(a.has_value());
  CHECK(*a == doctest::Approx(0.5));
  CHECK_FALSE(first_root_after(p, 0.5, 1.0).has_value());

  auto b = first_root_after(from_roots({0.3, 0.6}), 0.4, 1.0);
  REQUIRE(b.has_value());
  CHECK(*b == doctest::Approx(0.6).epsilon(1e-8));
}

TEST_CASE("sign_just_after") {
  const Polynomial p{-0.5, 1.0};
  CHECK(sign_just_after(p, 0.5, 1.0) == 1);
  CHECK(sign_just_after(p, 0.0, 1.0) == -1);
  CHECK(sign_just_after(-1.0 * p, 0.5, 1.0) == -1);
  CHECK(sign_just_after(Polynomial{}, 0.0, 1.0) == 0);
}

TEST_CASE("piecewise failure search") {
  // margin(t) = min(1 - t, t + 0.5): positive until t = 1, crossing there.
  FailurePredicate pred;
  pred.breakpoints = {Polynomial{1, -1}, Polynomial{0.5, 1}};
  pred.margin = [](double t) { return std::min(1.0 - t, t + 0.5); };
  auto q = first_failure_after(pred, 0.0, 2.0);
  CHECK_FALSE(q.immediately_invalid);
  REQUIRE(q.time.has_value());
  CHECK(*q.time == doctest::Approx(1.0).epsilon(1e-7));

  // Invalid right away.
  FailurePredicate bad;
  bad.breakpoints = {Polynomial{1, -1}};
  bad.margin = [](double) { return -1.0; };
  CHECK(first_failure_after(bad, 0.0, 2.0).immediately_invalid);

  // A touch without crossing is not a failure.
  FailurePredicate touch;
  touch.breakpoints = {Polynomial{0.25, -1, 1}};  // (t-1/2)^2
  touch.margin = [](double t) { return (t - 0.5) * (t - 0.5); };
  auto qt = first_failure_after(touch, 0.0, 2.0);
  CHECK_FALSE(qt.immediately_invalid);
  CHECK_FALSE(qt.time.has_value());
}
