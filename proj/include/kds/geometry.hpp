#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kds/errors.hpp"
#include "kds/motion.hpp"

namespace kds {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double sqnorm(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(sqnorm(a)); }

/// Fixed frame of the six 60-degree wedges. Wedge l spans the half-open
/// angular range [(2l-1)*30deg, (2l+1)*30deg); bisector(l) points at l*60deg;
/// ray(l) is the boundary direction shared by wedges l and l+1.
namespace wedge {

inline constexpr int kCount = 6;

Vec2 bisector(int l);
Vec2 ray(int l);

}  // namespace wedge

/// Wedge index at `apex` containing direction (q - apex).
/// Boundary directions belong to the wedge whose range is closed there.
int wedge_of(Vec2 apex, Vec2 q);

/// Scalar projection of (q - apex) onto the bisector of wedge l.
double bl_coordinate(Vec2 apex, Vec2 q, int l);

/// Fixed-time positions of a point set.
struct Snapshot {
  std::vector<int> ids;
  std::vector<Vec2> pos;
  double t = 0.0;

  size_t size() const { return ids.size(); }
  int index_of(int id) const;  // -1 when absent
  static Snapshot at(std::span<const MotionPoint> pts, double t);
};

/// Directed wedge graph. For the semi-Yao graph the wedge index is taken at
/// the target (the edge runs minimum-projection point -> apex); for the Yao
/// graph it is taken at the source (apex -> nearest point in wedge).
struct DirectedEdge {
  int source = -1;
  int target = -1;
  int wedge = -1;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct ProximityGraph {
  std::vector<int> vertices;           // point ids
  std::vector<DirectedEdge> edges;     // sorted

  std::vector<std::pair<int, int>> undirected() const;
};

using EdgeSet = std::vector<std::pair<int, int>>;  // canonical: a < b, sorted

EdgeSet make_edge_set(std::vector<std::pair<int, int>> pairs);
bool edge_set_contains(const EdgeSet& s, int a, int b);
EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b);
bool edge_set_subset(const EdgeSet& sub, const EdgeSet& super);

// Builders.

ProximityGraph build_semi_yao(const Snapshot& snap);
ProximityGraph build_yao(const Snapshot& snap);

/// Nearest-neighbor graph read off the semi-Yao graph: for each point keep
/// the Euclidean-shortest incident edge.
ProximityGraph extract_nng(const ProximityGraph& syg, const Snapshot& snap);

struct ClosestPair {
  int a = -1;
  int b = -1;
  double distance = 0.0;
};

/// Closest pair as the shortest semi-Yao edge. Throws TooFewPointsError for n < 2.
ClosestPair closest_pair(const Snapshot& snap);

struct EmstResult {
  EdgeSet edges;
  double weight = 0.0;
};

/// Minimum spanning tree via greedy selection over the Yao graph edges.
EmstResult build_emst(const Snapshot& snap);

// Independent brute-force oracles.

ProximityGraph oracle_semi_yao(const Snapshot& snap);
ProximityGraph oracle_yao(const Snapshot& snap);
ProximityGraph oracle_nng(const Snapshot& snap);
ClosestPair oracle_closest_pair(const Snapshot& snap);
/// Kruskal over the complete graph.
EmstResult oracle_emst(const Snapshot& snap);

/// Tri-shape Delaunay edge predicate per wedge parity: (i, j) is an edge iff
/// for some wedge k of the given parity, j lies in wedge k of i and attains
/// the minimum bisector projection there (or symmetrically).
EdgeSet oracle_edt_edges(const Snapshot& snap, int parity);

}  // namespace kds
