#include "kds/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kds {

namespace wedge {

namespace {
constexpr double kRt3Half = 0.86602540378443864676;  // sqrt(3)/2

constexpr std::array<Vec2, 6> kBisectors = {{{1.0, 0.0},
                                             {0.5, kRt3Half},
                                             {-0.5, kRt3Half},
                                             {-1.0, 0.0},
                                             {-0.5, -kRt3Half},
                                             {0.5, -kRt3Half}}};

constexpr std::array<Vec2, 6> kRays = {{{kRt3Half, 0.5},
                                        {0.0, 1.0},
                                        {-kRt3Half, 0.5},
                                        {-kRt3Half, -0.5},
                                        {0.0, -1.0},
                                        {kRt3Half, -0.5}}};
}  // namespace

Vec2 bisector(int l) { return kBisectors[((l % kCount) + kCount) % kCount]; }
Vec2 ray(int l) { return kRays[((l % kCount) + kCount) % kCount]; }

}  // namespace wedge

int wedge_of(Vec2 apex, Vec2 q) {
  const Vec2 d = q - apex;
  if (d.x == 0.0 && d.y == 0.0) throw CoincidentPointsError{};
  for (int l = 0; l < wedge::kCount; ++l) {
    const Vec2 lower = wedge::ray((l + 5) % 6);  // closed boundary
    const Vec2 upper = wedge::ray(l);            // open boundary
    if (cross(lower, d) >= 0.0 && cross(upper, d) < 0.0) return l;
  }
  // Unreachable for finite nonzero d; keep the compiler satisfied.
  return 0;
}

double bl_coordinate(Vec2 apex, Vec2 q, int l) { return dot(q - apex, wedge::bisector(l)); }

int Snapshot::index_of(int id) const {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return static_cast<int>(i);
  return -1;
}

Snapshot Snapshot::at(std::span<const MotionPoint> pts, double t) {
  Snapshot s;
  s.t = t;
  s.ids.reserve(pts.size());
  s.pos.reserve(pts.size());
  for (const MotionPoint& p : pts) {
    s.ids.push_back(p.id);
    s.pos.push_back({p.x(t), p.y(t)});
  }
  return s;
}

std::vector<std::pair<int, int>> ProximityGraph::undirected() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const DirectedEdge& e : edges)
    pairs.emplace_back(std::min(e.source, e.target), std::max(e.source, e.target));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

EdgeSet make_edge_set(std::vector<std::pair<int, int>> pairs) {
  for (auto& [a, b] : pairs)
    if (a > b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

bool edge_set_contains(const EdgeSet& s, int a, int b) {
  if (a > b) std::swap(a, b);
  return std::binary_search(s.begin(), s.end(), std::make_pair(a, b));
}

EdgeSet edge_set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool edge_set_subset(const EdgeSet& sub, const EdgeSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

namespace {

void sort_edges(ProximityGraph& g) { std::sort(g.edges.begin(), g.edges.end()); }

/// Per-apex scan shared by the semi-Yao builders: for every wedge of every
/// apex, pick the point minimizing the bisector projection. Ties go to the
/// smaller id.
ProximityGraph semi_yao_scan(const Snapshot& snap) {
  const int n = static_cast<int>(snap.size());
  ProximityGraph g;
  g.vertices = snap.ids;
  for (int i = 0; i < n; ++i) {
    std::array<int, 6> best{-1, -1, -1, -1, -1, -1};
    std::array<double, 6> best_b{};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int l = wedge_of(snap.pos[i], snap.pos[j]);
      const double b = bl_coordinate(snap.pos[i], snap.pos[j], l);
      if (best[l] < 0 || b < best_b[l] || (b == best_b[l] && snap.ids[j] < snap.ids[best[l]])) {
        best[l] = j;
        best_b[l] = b;
      }
    }
    for (int l = 0; l < 6; ++l)
      if (best[l] >= 0) g.edges.push_back({snap.ids[best[l]], snap.ids[i], l});
  }
  sort_edges(g);
  return g;
}

ProximityGraph yao_scan(const Snapshot& snap) {
  const int n = static_cast<int>(snap.size());
  ProximityGraph g;
  g.vertices = snap.ids;
  for (int i = 0; i < n; ++i) {
    std::array<int, 6> best{-1, -1, -1, -1, -1, -1};
    std::array<double, 6> best_d{};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int l = wedge_of(snap.pos[i], snap.pos[j]);
      const double d = sqnorm(snap.pos[j] - snap.pos[i]);
      if (best[l] < 0 || d < best_d[l] || (d == best_d[l] && snap.ids[j] < snap.ids[best[l]])) {
        best[l] = j;
        best_d[l] = d;
      }
    }
    for (int l = 0; l < 6; ++l)
      if (best[l] >= 0) g.edges.push_back({snap.ids[i], snap.ids[best[l]], l});
  }
  sort_edges(g);
  return g;
}

}  // namespace

ProximityGraph build_semi_yao(const Snapshot& snap) { return semi_yao_scan(snap); }

ProximityGraph build_yao(const Snapshot& snap) { return yao_scan(snap); }

ProximityGraph extract_nng(const ProximityGraph& syg, const Snapshot& snap) {
  ProximityGraph g;
  g.vertices = snap.ids;
  const int n = static_cast<int>(snap.size());
  if (n < 2) return g;
  // Shortest incident semi-Yao edge per point, scanning each edge twice.
  std::vector<int> best(n, -1);
  std::vector<double> best_d(n, 0.0);
  auto consider = [&](int id_a, int id_b) {
    const int a = snap.index_of(id_a), b = snap.index_of(id_b);
    const double d = sqnorm(snap.pos[b] - snap.pos[a]);
    if (best[a] < 0 || d < best_d[a] || (d == best_d[a] && id_b < snap.ids[best[a]])) {
      best[a] = b;
      best_d[a] = d;
    }
  };
  for (const DirectedEdge& e : syg.edges) {
    consider(e.source, e.target);
    consider(e.target, e.source);
  }
  for (int i = 0; i < n; ++i) {
    if (best[i] < 0) throw InconsistentStateError("semi-Yao graph leaves a point isolated");
    g.edges.push_back({snap.ids[i], snap.ids[best[i]],
                       wedge_of(snap.pos[i], snap.pos[best[i]])});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

ClosestPair closest_pair(const Snapshot& snap) {
  if (snap.size() < 2) throw TooFewPointsError{};
  const ProximityGraph syg = build_semi_yao(snap);
  ClosestPair cp;
  double best = std::numeric_limits<double>::infinity();
  for (const DirectedEdge& e : syg.edges) {
    const int a = snap.index_of(e.source), b = snap.index_of(e.target);
    const double d = sqnorm(snap.pos[a] - snap.pos[b]);
    int lo = std::min(e.source, e.target), hi = std::max(e.source, e.target);
    if (d < best || (d == best && std::make_pair(lo, hi) < std::make_pair(cp.a, cp.b))) {
      best = d;
      cp.a = lo;
      cp.b = hi;
    }
  }
  cp.distance = std::sqrt(best);
  return cp;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

EmstResult kruskal(const Snapshot& snap, const EdgeSet& candidates) {
  struct W {
    double d;
    std::pair<int, int> e;
  };
  std::vector<W> ws;
  ws.reserve(candidates.size());
  for (auto [a, b] : candidates) {
    const int i = snap.index_of(a), j = snap.index_of(b);
    ws.push_back({sqnorm(snap.pos[i] - snap.pos[j]), {a, b}});
  }
  std::sort(ws.begin(), ws.end(), [](const W& x, const W& y) {
    return x.d != y.d ? x.d < y.d : x.e < y.e;
  });
  Dsu dsu(static_cast<int>(snap.size()));
  EmstResult out;
  for (const W& w : ws) {
    if (dsu.unite(snap.index_of(w.e.first), snap.index_of(w.e.second))) {
      out.edges.push_back(w.e);
      out.weight += std::sqrt(w.d);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

EmstResult build_emst(const Snapshot& snap) {
  if (snap.size() <= 1) return {};
  return kruskal(snap, build_yao(snap).undirected());
}

ProximityGraph oracle_semi_yao(const Snapshot& snap) {
  const int n = static_cast<int>(snap.size());
  ProximityGraph g;
  g.vertices = snap.ids;
  // Pair-wise reformulation: j -> i is an edge iff no k in wedge(i, j) has a
  // strictly smaller projection (or equal with smaller id).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int l = wedge_of(snap.pos[i], snap.pos[j]);
      const double bj = bl_coordinate(snap.pos[i], snap.pos[j], l);
      bool is_min = true;
      for (int k = 0; k < n && is_min; ++k) {
        if (k == i || k == j) continue;
        if (wedge_of(snap.pos[i], snap.pos[k]) != l) continue;
        const double bk = bl_coordinate(snap.pos[i], snap.pos[k], l);
        if (bk < bj || (bk == bj && snap.ids[k] < snap.ids[j])) is_min = false;
      }
      if (is_min) g.edges.push_back({snap.ids[j], snap.ids[i], l});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

ProximityGraph oracle_yao(const Snapshot& snap) {
  const int n = static_cast<int>(snap.size());
  ProximityGraph g;
  g.vertices = snap.ids;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int l = wedge_of(snap.pos[i], snap.pos[j]);
      const double dj = sqnorm(snap.pos[j] - snap.pos[i]);
      bool nearest = true;
      for (int k = 0; k < n && nearest; ++k) {
        if (k == i || k == j) continue;
        if (wedge_of(snap.pos[i], snap.pos[k]) != l) continue;
        const double dk = sqnorm(snap.pos[k] - snap.pos[i]);
        if (dk < dj || (dk == dj && snap.ids[k] < snap.ids[j])) nearest = false;
      }
      if (nearest) g.edges.push_back({snap.ids[i], snap.ids[j], l});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

ProximityGraph oracle_nng(const Snapshot& snap) {
  const int n = static_cast<int>(snap.size());
  ProximityGraph g;
  g.vertices = snap.ids;
  for (int i = 0; i < n; ++i) {
    int best = -1;
    double best_d = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = sqnorm(snap.pos[j] - snap.pos[i]);
      if (best < 0 || d < best_d || (d == best_d && snap.ids[j] < snap.ids[best])) {
        best = j;
        best_d = d;
      }
    }
    if (best >= 0)
      g.edges.push_back({snap.ids[i], snap.ids[best], wedge_of(snap.pos[i], snap.pos[best])});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

ClosestPair oracle_closest_pair(const Snapshot& snap) {
  if (snap.size() < 2) throw TooFewPointsError{};
  const int n = static_cast<int>(snap.size());
  ClosestPair cp;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = sqnorm(snap.pos[j] - snap.pos[i]);
      int lo = std::min(snap.ids[i], snap.ids[j]), hi = std::max(snap.ids[i], snap.ids[j]);
      if (d < best || (d == best && std::make_pair(lo, hi) < std::make_pair(cp.a, cp.b))) {
        best = d;
        cp.a = lo;
        cp.b = hi;
      }
    }
  }
  cp.distance = std::sqrt(best);
  return cp;
}

EmstResult oracle_emst(const Snapshot& snap) {
  if (snap.size() <= 1) return {};
  std::vector<std::pair<int, int>> all;
  for (size_t i = 0; i < snap.size(); ++i)
    for (size_t j = i + 1; j < snap.size(); ++j) all.emplace_back(snap.ids[i], snap.ids[j]);
  return kruskal(snap, make_edge_set(std::move(all)));
}

EdgeSet oracle_edt_edges(const Snapshot& snap, int parity) {
  const int n = static_cast<int>(snap.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int l = wedge_of(snap.pos[i], snap.pos[j]);
      if ((l & 1) != parity) continue;
      const double bj = bl_coordinate(snap.pos[i], snap.pos[j], l);
      bool is_min = true;
      for (int k = 0; k < n && is_min; ++k) {
        if (k == i || k == j) continue;
        if (wedge_of(snap.pos[i], snap.pos[k]) != l) continue;
        const double bk = bl_coordinate(snap.pos[i], snap.pos[k], l);
        if (bk < bj || (bk == bj && snap.ids[k] < snap.ids[j])) is_min = false;
      }
      if (is_min) pairs.emplace_back(snap.ids[i], snap.ids[j]);
    }
  }
  return make_edge_set(std::move(pairs));
}

}  // namespace kds
