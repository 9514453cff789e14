#include "kds/motion.hpp"

#include <algorithm>
#include <cmath>

namespace kds {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

/// Bisect a sign change of p inside [lo, hi] down to width tol.
double bisect(const Polynomial& p, double lo, double hi, int slo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution exhausted
    const int sm = sgn(p(mid));
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, Polynomial p) {
  for (double& v : p.coeffs_) v *= s;
  p.trim();
  return p;
}

std::vector<double> isolate_roots(const Polynomial& p, TimeInterval window, double tol) {
  if (p.is_zero()) throw IdenticallyZeroError{};
  std::vector<double> roots;
  if (p.degree() == 0 || window.start > window.end) return roots;

  // Split the window at the critical points of p; p is monotone between
  // consecutive ones, so each subinterval holds at most one root.
  std::vector<double> cuts;
  cuts.push_back(window.start);
  if (p.degree() > 1) {
    for (double c : isolate_roots(p.derivative(), window, tol))
      if (c > window.start && c < window.end) cuts.push_back(c);
  }
  cuts.push_back(window.end);

  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    const int slo = sgn(p(lo)), shi = sgn(p(hi));
    if (slo == 0) {
      roots.push_back(lo);
    } else if (slo != shi && shi != 0) {
      roots.push_back(bisect(p, lo, hi, slo, tol));
    }
  }
  if (sgn(p(window.end)) == 0) roots.push_back(window.end);

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (merged.empty() || r - merged.back() > tol) merged.push_back(r);
  }
  return merged;
}

std::optional<double> first_root_after(const Polynomial& p, double t0, double horizon,
                                       double tol) {
  // Roots bracketed within tol of t0 are indistinguishable from an event at
  // t0 itself and are never rescheduled.
  for (double r : isolate_roots(p, {t0, horizon}, tol))
    if (r > t0 + tol) return r;
  return std::nullopt;
}

int sign_just_after(const Polynomial& p, double t, double horizon, double tol) {
  if (p.is_zero()) return 0;
  double upper = horizon;
  if (auto r = first_root_after(p, t, horizon, tol)) upper = *r;
  if (upper <= t) upper = t + tol;
  const double probe = 0.5 * (t + upper);
  const int s = (p(probe) > 0.0) - (p(probe) < 0.0);
  if (s != 0) return s;
  // Probe sat exactly on a zero: nudge once more toward t.
  const double probe2 = t + 0.25 * (upper - t);
  return (p(probe2) > 0.0) - (p(probe2) < 0.0);
}

FailureQuery first_failure_after(const FailurePredicate& pred, double t0, double horizon,
                                 double tol) {
  FailureQuery out;
  if (t0 >= horizon) return out;

  std::vector<double> candidates;
  for (const Polynomial& p : pred.breakpoints) {
    if (p.is_zero() || p.degree() == 0) continue;
    for (double r : isolate_roots(p, {t0, horizon}, tol))
      if (r > t0) candidates.push_back(r);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<double> cuts;
  cuts.push_back(t0);
  for (double r : candidates)
    if (r - cuts.back() > tol) cuts.push_back(r);
  if (horizon - cuts.back() > tol) cuts.push_back(horizon);

  int prev_sign = 0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    const double m = pred.margin(mid);
    const int s = (m > 0.0) ? 1 : -1;  // zero margin mid-interval counts as failed
    if (k == 0 && s < 0) {
      out.immediately_invalid = true;
      return out;
    }
    if (prev_sign > 0 && s < 0) {
      out.time = cuts[k];
      return out;
    }
    prev_sign = s;
  }
  return out;
}

}  // namespace kds
