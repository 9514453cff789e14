#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kds/geometry.hpp"
#include "kds/motion.hpp"

namespace kds {

/// One family of circumscribing shapes: the equilateral triangle of a wedge
/// parity, or the disk sector ("pie") of one wedge. A shape is cut out by up
/// to three boundary elements; removing element k (sending it to infinity)
/// yields the unbounded shapes that certify hull edges. Boundary elements are
/// indexed 0, 1, 2 and correspond one-to-one to the three direction-at-
/// infinity vertices of a HalfEdgeMesh.
class ShapeSystem {
 public:
  enum class Family { Tri, Pie };

  static ShapeSystem tri(int parity);
  static ShapeSystem pie(int sector);

  Family family() const { return family_; }
  int variant() const { return variant_; }
  const std::string& name() const { return name_; }

  /// Signed clearance of w from the circumscribing shape of a face with
  /// finite corners `fin` (3 - popcount(removed_mask) of them) and the given
  /// removed elements: positive strictly outside, negative strictly inside.
  double margin(Vec2 w, std::span<const Vec2> fin, unsigned removed_mask) const;

  /// Polynomials whose roots cover all times at which the moving point w can
  /// lie on the moving circumscribing shape of `fin`.
  void append_breakpoints(std::span<const MotionPoint> fin, const MotionPoint& w,
                          unsigned removed_mask, std::vector<Polynomial>& out) const;

  // Pie geometry, exposed for the pair-predicate oracle.
  struct PieShape {
    Vec2 apex;
    double radius = 0.0;
  };
  /// The circumscribing pie of three points, resolved by assigning each point
  /// to a boundary element; std::nullopt when no assignment validates.
  std::optional<PieShape> circumscribing_pie(Vec2 a, Vec2 b, Vec2 c) const;
  double pie_margin(Vec2 w, const PieShape& s) const;

  Vec2 side_dir_lo() const { return u_lo_; }
  Vec2 side_dir_hi() const { return u_hi_; }
  Vec2 side_normal_lo() const { return nu_lo_; }
  Vec2 side_normal_hi() const { return nu_hi_; }
  bool dir_in_sector(Vec2 d, double slack = 0.0) const;

 private:
  ShapeSystem(Family f, int variant);

  double linear_margin(Vec2 w, std::span<const Vec2> fin, unsigned removed_mask) const;
  /// Outward directions of the boundary constraints that survive the removal.
  std::vector<Vec2> kept_dirs(unsigned removed_mask) const;

  Family family_;
  int variant_;
  std::string name_;
  // Pie frame (unused for Tri).
  Vec2 u_lo_{}, u_hi_{}, nu_lo_{}, nu_hi_{}, bis_{};
  // Tri normals.
  std::array<Vec2, 3> tri_normals_{};
};

/// Coordinate polynomials as a pair, for breakpoint construction.
struct PolyVec2 {
  Polynomial x, y;
};

Polynomial dot_poly(const PolyVec2& a, Vec2 d);
PolyVec2 sub_poly(const MotionPoint& a, const MotionPoint& b);

}  // namespace kds
