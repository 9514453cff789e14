#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kds/errors.hpp"

namespace kds {

/// Default width for root brackets, in time units. Overridable per call and
/// via KDS_TOL in the CLI.
inline constexpr double kDefaultRootTol = 1e-9;

struct TimeInterval {
  double start = 0.0;
  double end = 0.0;

  bool contains(double t) const { return start <= t && t <= end; }
  double length() const { return end - start; }
};

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(double c) { return Polynomial{c}; }
  /// c0 + c1*t.
  static Polynomial linear(double c0, double c1) { return Polynomial{c0, c1}; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, Polynomial p);

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Coordinate trajectories of one input point.
struct MotionPoint {
  int id = -1;
  Polynomial x;
  Polynomial y;

  double px(double t) const { return x(t); }
  double py(double t) const { return y(t); }
};

/// All real roots of p inside [window.start, window.end], strictly ascending,
/// each bracketed to width <= tol; roots closer than tol are merged.
/// Throws IdenticallyZeroError for the zero polynomial.
std::vector<double> isolate_roots(const Polynomial& p, TimeInterval window,
                                  double tol = kDefaultRootTol);

/// Smallest root r with t0 < r <= horizon, if any. Strict at t0 so an event
/// just processed is never rescheduled.
std::optional<double> first_root_after(const Polynomial& p, double t0, double horizon,
                                       double tol = kDefaultRootTol);

/// Sign of p on the interval immediately after t (evaluated strictly inside
/// (t, next root of p]). Returns -1, 0 (identically zero), or +1.
int sign_just_after(const Polynomial& p, double t, double horizon,
                    double tol = kDefaultRootTol);

/// A certificate condition whose validity margin is a piecewise-smooth
/// function of time: positive while the certificate holds, negative once it
/// fails. `breakpoints` is any finite polynomial family whose roots cover
/// every time at which the margin can change sign.
struct FailurePredicate {
  std::vector<Polynomial> breakpoints;
  std::function<double(double)> margin;
};

struct FailureQuery {
  /// Margin is already negative immediately after the query time (a cascade
  /// step that must be handled now rather than scheduled).
  bool immediately_invalid = false;
  std::optional<double> time;
};

/// First time in (t0, horizon] at which the predicate's margin crosses from
/// positive to negative, found by a sign scan over the breakpoint roots.
FailureQuery first_failure_after(const FailurePredicate& pred, double t0, double horizon,
                                 double tol = kDefaultRootTol);

}  // namespace kds
