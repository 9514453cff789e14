#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kds/geometry.hpp"

namespace kds {

/// Mutable half-edge triangulation used by the incremental builder and the
/// kinetic maintenance engine. Vertices [0, finite_count) are input points;
/// the last three are direction-at-infinity vertices, one per removable
/// boundary element of the defining shape, so every face (including the
/// unbounded ones) is a combinatorial triangle and the whole complex closes
/// into a sphere whose outermost face has all three infinite corners.
///
/// Half-edges come in twin pairs: twin(h) == h ^ 1, edge index == h >> 1.
class HalfEdgeMesh {
 public:
  struct Half {
    int origin = -1;
    int next = -1;
    int prev = -1;
    int face = -1;
  };

  struct InsertDiff {
    std::vector<int> removed_edges;   // edge indices freed
    std::vector<int> created_edges;   // spokes
    std::vector<int> boundary_edges;  // cavity rim, kept but reconfigured
  };

  HalfEdgeMesh() = default;

  /// Mesh over one finite vertex and the three infinite ones (a tetrahedron).
  static HalfEdgeMesh around_first_point(int finite_count, int first_vertex);

  int finite_count() const { return finite_count_; }
  int infinite_vertex(int element) const { return finite_count_ + element; }
  bool is_infinite(int v) const { return v >= finite_count_; }

  bool edge_alive(int e) const { return e >= 0 && e < int(edge_alive_.size()) && edge_alive_[e]; }
  bool face_alive(int f) const { return f >= 0 && f < int(face_alive_.size()) && face_alive_[f]; }
  int edge_count_bound() const { return static_cast<int>(edge_alive_.size()); }
  int face_count_bound() const { return static_cast<int>(face_alive_.size()); }
  int outer_face() const { return outer_face_; }

  int origin(int h) const { return half_[h].origin; }
  int head(int h) const { return half_[h ^ 1].origin; }
  int next(int h) const { return half_[h].next; }
  int prev(int h) const { return half_[h].prev; }
  int face_of_half(int h) const { return half_[h].face; }
  int face_half(int f) const { return face_half_[f]; }

  std::pair<int, int> edge_vertices(int e) const { return {origin(2 * e), origin(2 * e + 1)}; }
  std::array<int, 3> face_vertices(int f) const;
  /// Third vertex of the face on the given side of edge e (side 0 = half 2e).
  int apex(int e, int side) const;
  /// The four boundary edges of the two faces adjacent to e.
  std::array<int, 4> quad_edges(int e) const;

  /// Rotates edge e inside its quad; endpoints become the two old apexes.
  void flip(int e);

  /// Incremental insertion: carves every live non-outer face for which
  /// `conflict` is true (the region must be edge-connected and contain the
  /// new vertex) and retriangulates the cavity as a fan around v.
  InsertDiff insert_vertex(int v, const std::function<bool(int face)>& conflict);

  std::vector<std::pair<int, int>> finite_edges() const;        // vertex pairs, a<b, sorted
  std::vector<std::array<int, 3>> finite_triangles() const;     // sorted triples, sorted
  std::vector<std::pair<int, int>> hull_edges() const;          // finite edges on infinite faces
  std::vector<int> live_edges() const;
  void check_integrity() const;  // throws InconsistentStateError

 private:
  int new_edge(int a, int b);
  int new_face(int h0, int h1, int h2);
  void kill_edge(int e);
  void kill_face(int f);
  void link(int a, int b) {
    half_[a].next = b;
    half_[b].prev = a;
  }

  int finite_count_ = 0;
  int outer_face_ = -1;
  std::vector<Half> half_;
  std::vector<int> face_half_;
  std::vector<char> edge_alive_;
  std::vector<char> face_alive_;
  std::vector<int> free_edges_;
  std::vector<int> free_faces_;
};

/// Static planar subdivision of one shape-Delaunay graph: straight-line
/// half-edge structure over the finite points, bounded faces, and the cycle
/// of the unbounded face.
struct ShapeDelaunay {
  struct Half {
    int origin = -1;  // snapshot index
    int twin = -1;
    int next = -1;
    int face = -1;
  };

  std::string tag;
  std::vector<int> vertex_ids;
  EdgeSet edges;                              // by point id
  std::vector<std::array<int, 3>> triangles;  // bounded faces, id triples
  std::vector<int> hull;                      // unbounded-face cycle, ids
  std::vector<Half> halves;
  int face_count = 0;
  int outer_face = -1;
  bool bounded_faces_triangular = true;

  bool euler_ok() const;
};

/// Face extraction for a planar straight-line edge set (angular sweep around
/// every vertex; the unbounded face is the cycle with non-positive area).
ShapeDelaunay extract_subdivision(const Snapshot& snap, const EdgeSet& edges, std::string tag);

}  // namespace kds
