#include "kds/shapes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace kds {

namespace {
constexpr double kValidateSlack = 1e-7;

double max_support(std::span<const Vec2> fin, Vec2 d) {
  double h = dot(fin[0], d);
  for (size_t k = 1; k < fin.size(); ++k) h = std::max(h, dot(fin[k], d));
  return h;
}
}  // namespace

Polynomial dot_poly(const PolyVec2& a, Vec2 d) {
  return d.x * a.x + d.y * a.y;
}

PolyVec2 sub_poly(const MotionPoint& a, const MotionPoint& b) {
  return {a.x - b.x, a.y - b.y};
}

ShapeSystem::ShapeSystem(Family f, int variant) : family_(f), variant_(variant) {
  if (f == Family::Tri) {
    name_ = "edt" + std::to_string(variant);
    for (int e = 0; e < 3; ++e) tri_normals_[e] = wedge::bisector(variant + 2 * e);
  } else {
    name_ = "pdt" + std::to_string(variant);
    u_lo_ = wedge::ray(variant + 5);
    u_hi_ = wedge::ray(variant);
    nu_lo_ = wedge::bisector(variant + 4);
    nu_hi_ = wedge::bisector(variant + 2);
    bis_ = wedge::bisector(variant);
  }
}

ShapeSystem ShapeSystem::tri(int parity) { return ShapeSystem(Family::Tri, parity & 1); }
ShapeSystem ShapeSystem::pie(int sector) { return ShapeSystem(Family::Pie, sector % 6); }

std::vector<Vec2> ShapeSystem::kept_dirs(unsigned removed_mask) const {
  std::vector<Vec2> dirs;
  if (family_ == Family::Tri) {
    for (int e = 0; e < 3; ++e)
      if (!(removed_mask & (1u << e))) dirs.push_back(tri_normals_[e]);
    return dirs;
  }
  const bool lo = removed_mask & 1u, hi = removed_mask & 2u, arc = removed_mask & 4u;
  if (!lo && !hi && !arc) return dirs;  // true pie, handled separately
  if (!lo) dirs.push_back(nu_lo_);
  if (!hi) dirs.push_back(nu_hi_);
  if (!arc) {
    // Direction of the straightened arc depends on which sides survive.
    if (!lo && !hi) {
      // both sides kept, arc removed: nothing to add (cone)
    } else if (!lo) {
      dirs.push_back(u_lo_);
    } else if (!hi) {
      dirs.push_back(u_hi_);
    } else {
      dirs.push_back(bis_);
    }
  }
  return dirs;
}

bool ShapeSystem::dir_in_sector(Vec2 d, double slack) const {
  const double s = slack * (norm(d) + 1e-300);
  return cross(u_lo_, d) >= -s && cross(u_hi_, d) <= s;
}

double ShapeSystem::pie_margin(Vec2 w, const PieShape& s) const {
  const Vec2 d = w - s.apex;
  return std::max({dot(d, nu_lo_), dot(d, nu_hi_), norm(d) - s.radius});
}

std::optional<ShapeSystem::PieShape> ShapeSystem::circumscribing_pie(Vec2 a, Vec2 b,
                                                                     Vec2 c) const {
  assert(family_ == Family::Pie);
  const Vec2 pts[3] = {a, b, c};
  const double scale = 1.0 + std::max({norm(a), norm(b), norm(c)});
  const double eps = kValidateSlack * scale;

  PieShape best{};
  double best_violation = std::numeric_limits<double>::infinity();

  auto consider = [&](const PieShape& s, std::optional<double> arc_also) -> bool {
    // Validity: every corner inside-or-on; side feet within [0, radius];
    // arc-assigned directions inside the sector.
    double violation = 0.0;
    for (const Vec2& p : pts) violation = std::max(violation, pie_margin(p, s));
    if (arc_also) violation = std::max(violation, *arc_also);
    if (violation < best_violation) {
      best_violation = violation;
      best = s;
    }
    return violation <= eps;
  };

  // One point per element.
  const double denom_bij = dot(u_lo_, nu_hi_);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const int k = 3 - i - j;
      const double tau = dot(pts[j] - pts[i], nu_hi_) / denom_bij;
      PieShape s;
      s.apex = pts[i] + u_lo_ * tau;
      s.radius = norm(pts[k] - s.apex);
      const double foot_lo = dot(pts[i] - s.apex, u_lo_);
      const double foot_hi = dot(pts[j] - s.apex, u_hi_);
      double extra = std::max(-foot_lo, -foot_hi);
      extra = std::max({extra, foot_lo - s.radius, foot_hi - s.radius});
      if (!dir_in_sector(pts[k] - s.apex, kValidateSlack)) extra = std::max(extra, scale);
      if (consider(s, extra)) return s;
    }
  }

  // One point on a side, two on the arc.
  for (int side = 0; side < 2; ++side) {
    const Vec2 u = side == 0 ? u_lo_ : u_hi_;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const Vec2 A = pts[j], B = pts[k], X = pts[i];
      const double denom = dot(A - B, u);
      if (std::abs(denom) < 1e-14 * scale) continue;
      const double tau = (0.5 * (sqnorm(A) - sqnorm(B)) - dot(A - B, X)) / denom;
      PieShape s;
      s.apex = X + u * tau;
      s.radius = norm(A - s.apex);
      const double foot = dot(X - s.apex, u);
      double extra = std::max(-foot, foot - s.radius);
      if (!dir_in_sector(A - s.apex, kValidateSlack)) extra = std::max(extra, scale);
      if (!dir_in_sector(B - s.apex, kValidateSlack)) extra = std::max(extra, scale);
      if (consider(s, extra)) return s;
    }
  }

  // All three on the arc: plain circumcenter.
  {
    const Vec2 d1 = b - a, d2 = c - a;
    const double det = 2.0 * cross(d1, d2);
    if (std::abs(det) > 1e-14 * scale * scale) {
      const double s1 = sqnorm(d1), s2 = sqnorm(d2);
      PieShape s;
      s.apex = a + Vec2{d2.y * s1 - d1.y * s2, d1.x * s2 - d2.x * s1} * (1.0 / det);
      s.radius = norm(a - s.apex);
      double extra = 0.0;
      for (const Vec2& p : pts)
        if (!dir_in_sector(p - s.apex, kValidateSlack)) extra = std::max(extra, scale);
      if (consider(s, extra)) return s;
    }
  }

  if (best_violation < 0.25 * scale) return best;  // near-degenerate fallback
  return std::nullopt;
}

double ShapeSystem::linear_margin(Vec2 w, std::span<const Vec2> fin,
                                  unsigned removed_mask) const {
  const std::vector<Vec2> dirs = kept_dirs(removed_mask);
  double m = -std::numeric_limits<double>::infinity();
  for (Vec2 d : dirs) m = std::max(m, dot(w, d) - max_support(fin, d));
  return m;
}

double ShapeSystem::margin(Vec2 w, std::span<const Vec2> fin, unsigned removed_mask) const {
  if (family_ == Family::Tri || removed_mask != 0) return linear_margin(w, fin, removed_mask);
  assert(fin.size() == 3);
  const auto pie = circumscribing_pie(fin[0], fin[1], fin[2]);
  if (!pie) throw DegenerateInputError("no circumscribing pie for a face");
  return pie_margin(w, *pie);
}

void ShapeSystem::append_breakpoints(std::span<const MotionPoint> fin, const MotionPoint& w,
                                     unsigned removed_mask, std::vector<Polynomial>& out) const {
  if (family_ == Family::Tri || removed_mask != 0) {
    // Linear constraints: w crossing a support line, and support reassignment
    // moments between the finite corners.
    for (Vec2 d : kept_dirs(removed_mask)) {
      for (const MotionPoint& f : fin) out.push_back(dot_poly(sub_poly(w, f), d));
      for (size_t i = 0; i < fin.size(); ++i)
        for (size_t j = i + 1; j < fin.size(); ++j)
          out.push_back(dot_poly(sub_poly(fin[i], fin[j]), d));
    }
    return;
  }

  assert(fin.size() == 3);
  const MotionPoint* pts[4] = {&fin[0], &fin[1], &fin[2], &w};
  auto sq = [](const PolyVec2& v) { return v.x * v.x + v.y * v.y; };

  // Two points on the straight sides, two on the arc.
  const double denom_bij = dot(u_lo_, nu_hi_);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      int rest[2], r = 0;
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) rest[r++] = k;
      const Polynomial tau =
          (1.0 / denom_bij) * dot_poly(sub_poly(*pts[j], *pts[i]), nu_hi_);
      PolyVec2 apex{pts[i]->x + u_lo_.x * tau, pts[i]->y + u_lo_.y * tau};
      PolyVec2 da{pts[rest[0]]->x - apex.x, pts[rest[0]]->y - apex.y};
      PolyVec2 db{pts[rest[1]]->x - apex.x, pts[rest[1]]->y - apex.y};
      out.push_back(sq(da) - sq(db));
    }
  }

  // One point on a side, three on the arc: equal-distance compatibility of
  // the two independent bisector conditions along the side line.
  for (int side = 0; side < 2; ++side) {
    const Vec2 u = side == 0 ? u_lo_ : u_hi_;
    for (int i = 0; i < 4; ++i) {
      int rest[3], r = 0;
      for (int k = 0; k < 4; ++k)
        if (k != i) rest[r++] = k;
      const MotionPoint &A = *pts[rest[0]], &B = *pts[rest[1]], &C = *pts[rest[2]];
      const MotionPoint& X = *pts[i];
      auto pair_nd = [&](const MotionPoint& P, const MotionPoint& Q) {
        PolyVec2 px{P.x, P.y}, qx{Q.x, Q.y};
        Polynomial N = 0.5 * (sq(px) - sq(qx)) - (dot_poly(sub_poly(P, Q), {1, 0}) * X.x +
                                                  dot_poly(sub_poly(P, Q), {0, 1}) * X.y);
        Polynomial D = dot_poly(sub_poly(P, Q), u);
        return std::make_pair(std::move(N), std::move(D));
      };
      auto [n1, d1] = pair_nd(A, B);
      auto [n2, d2] = pair_nd(A, C);
      out.push_back(n1 * d2 - n2 * d1);
    }
  }

  // All four on the arc: co-circularity.
  {
    PolyVec2 d[3];
    Polynomial q[3];
    for (int i = 0; i < 3; ++i) {
      d[i] = sub_poly(*pts[i], w);
      q[i] = d[i].x * d[i].x + d[i].y * d[i].y;
    }
    Polynomial det = d[0].x * (d[1].y * q[2] - d[2].y * q[1]) -
                     d[0].y * (d[1].x * q[2] - d[2].x * q[1]) +
                     q[0] * (d[1].x * d[2].y - d[2].x * d[1].y);
    out.push_back(std::move(det));
  }

  // Side-alignment moments (two points sharing one straight side).
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      out.push_back(dot_poly(sub_poly(*pts[i], *pts[j]), nu_lo_));
      out.push_back(dot_poly(sub_poly(*pts[i], *pts[j]), nu_hi_));
    }
  }
}

}  // namespace kds
