#include "kds/dcel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace kds {

int HalfEdgeMesh::new_edge(int a, int b) {
  int e;
  if (!free_edges_.empty()) {
    e = free_edges_.back();
    free_edges_.pop_back();
    edge_alive_[e] = 1;
  } else {
    e = static_cast<int>(edge_alive_.size());
    edge_alive_.push_back(1);
    half_.resize(half_.size() + 2);
  }
  half_[2 * e] = Half{a, -1, -1, -1};
  half_[2 * e + 1] = Half{b, -1, -1, -1};
  return e;
}

int HalfEdgeMesh::new_face(int h0, int h1, int h2) {
  int f;
  if (!free_faces_.empty()) {
    f = free_faces_.back();
    free_faces_.pop_back();
    face_alive_[f] = 1;
    face_half_[f] = h0;
  } else {
    f = static_cast<int>(face_alive_.size());
    face_alive_.push_back(1);
    face_half_.push_back(h0);
  }
  link(h0, h1);
  link(h1, h2);
  link(h2, h0);
  half_[h0].face = half_[h1].face = half_[h2].face = f;
  return f;
}

void HalfEdgeMesh::kill_edge(int e) {
  edge_alive_[e] = 0;
  half_[2 * e] = Half{};
  half_[2 * e + 1] = Half{};
  free_edges_.push_back(e);
}

void HalfEdgeMesh::kill_face(int f) {
  face_alive_[f] = 0;
  face_half_[f] = -1;
  free_faces_.push_back(f);
}

HalfEdgeMesh HalfEdgeMesh::around_first_point(int finite_count, int p) {
  HalfEdgeMesh m;
  m.finite_count_ = finite_count;
  const int a = m.infinite_vertex(0), b = m.infinite_vertex(1), c = m.infinite_vertex(2);
  const int pa = m.new_edge(p, a);
  const int pb = m.new_edge(p, b);
  const int pc = m.new_edge(p, c);
  const int ab = m.new_edge(a, b);
  const int bc = m.new_edge(b, c);
  const int ca = m.new_edge(c, a);
  m.new_face(2 * pa, 2 * ab, 2 * pb + 1);      // p -> a -> b -> p
  m.new_face(2 * pb, 2 * bc, 2 * pc + 1);      // p -> b -> c -> p
  m.new_face(2 * pc, 2 * ca, 2 * pa + 1);      // p -> c -> a -> p
  m.outer_face_ = m.new_face(2 * ab + 1, 2 * ca + 1, 2 * bc + 1);  // b -> a -> c -> b
  return m;
}

std::array<int, 3> HalfEdgeMesh::face_vertices(int f) const {
  const int h = face_half_[f];
  return {origin(h), origin(next(h)), origin(next(next(h)))};
}

int HalfEdgeMesh::apex(int e, int side) const {
  const int h = 2 * e + side;
  return origin(prev(h));
}

std::array<int, 4> HalfEdgeMesh::quad_edges(int e) const {
  const int h = 2 * e, t = 2 * e + 1;
  return {next(h) >> 1, prev(h) >> 1, next(t) >> 1, prev(t) >> 1};
}

void HalfEdgeMesh::flip(int e) {
  const int h = 2 * e, t = 2 * e + 1;
  const int f0 = half_[h].face, f1 = half_[t].face;
  const int hn = next(h), hp = prev(h);  // b->c, c->a
  const int tn = next(t), tp = prev(t);  // a->d, d->b
  const int c = origin(hp), d = origin(tp);
  const int a = origin(h), b = origin(t);

  half_[h].origin = d;  // d -> c
  half_[t].origin = c;  // c -> d

  link(tn, h);
  link(h, hp);
  link(hp, tn);
  half_[tn].face = half_[h].face = half_[hp].face = f0;
  face_half_[f0] = h;

  link(hn, t);
  link(t, tp);
  link(tp, hn);
  half_[hn].face = half_[t].face = half_[tp].face = f1;
  face_half_[f1] = t;

  (void)a;
  (void)b;
}

HalfEdgeMesh::InsertDiff HalfEdgeMesh::insert_vertex(
    int v, const std::function<bool(int)>& conflict) {
  InsertDiff diff;

  // Conflict region: seed at the first live conflicting face, then grow.
  std::vector<char> in_region(face_alive_.size(), 0);
  int seed = -1;
  for (int f = 0; f < int(face_alive_.size()); ++f) {
    if (!face_alive_[f] || f == outer_face_) continue;
    if (conflict(f)) {
      seed = f;
      break;
    }
  }
  if (seed < 0) throw InconsistentStateError("insert_vertex: no conflicting face");

  std::vector<int> stack{seed};
  std::vector<int> region;
  in_region[seed] = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    region.push_back(f);
    int h = face_half_[f];
    for (int k = 0; k < 3; ++k, h = next(h)) {
      const int g = half_[h ^ 1].face;
      if (g == outer_face_ || in_region[g]) continue;
      if (conflict(g)) {
        in_region[g] = 1;
        stack.push_back(g);
      }
    }
  }

  // Ordered cavity rim: half-edges inside the region whose twin is outside.
  int h0 = -1;
  for (int f : region) {
    int h = face_half_[f];
    for (int k = 0; k < 3 && h0 < 0; ++k, h = next(h))
      if (!in_region[half_[h ^ 1].face]) h0 = h;
    if (h0 >= 0) break;
  }
  if (h0 < 0) throw InconsistentStateError("insert_vertex: cavity has no rim");
  std::vector<int> rim;
  int h = h0;
  do {
    rim.push_back(h);
    int e = next(h);
    while (in_region[half_[e ^ 1].face]) e = next(e ^ 1);
    h = e;
  } while (h != h0);

  // Drop the old faces and the edges interior to the region.
  for (int f : region) kill_face(f);
  for (int he : rim) diff.boundary_edges.push_back(he >> 1);
  {
    std::vector<char> on_rim(edge_alive_.size(), 0);
    for (int e : diff.boundary_edges) on_rim[e] = 1;
    std::vector<int> dead;
    for (int e = 0; e < int(edge_alive_.size()); ++e) {
      if (!edge_alive_[e] || on_rim[e]) continue;
      if (half_[2 * e].face < 0 || !face_alive_[half_[2 * e].face]) {
        if (half_[2 * e + 1].face < 0 || !face_alive_[half_[2 * e + 1].face]) {
          // both sides were region faces
          dead.push_back(e);
        }
      }
    }
    for (int e : dead) {
      diff.removed_edges.push_back(e);
      kill_edge(e);
    }
  }

  // Fan around v: one spoke per rim vertex, one face per rim edge.
  const int k = static_cast<int>(rim.size());
  std::vector<int> spoke(k);  // spoke[i]: edge v -> origin(rim[i])
  for (int i = 0; i < k; ++i) {
    spoke[i] = new_edge(v, origin(rim[i]));
    diff.created_edges.push_back(spoke[i]);
  }
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    // face: rim[i] (u_i -> u_j), u_j -> v, v -> u_i
    new_face(rim[i], 2 * spoke[j] + 1, 2 * spoke[i]);
  }
  return diff;
}

std::vector<std::pair<int, int>> HalfEdgeMesh::finite_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < int(edge_alive_.size()); ++e) {
    if (!edge_alive_[e]) continue;
    auto [a, b] = edge_vertices(e);
    if (is_infinite(a) || is_infinite(b)) continue;
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 3>> HalfEdgeMesh::finite_triangles() const {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < int(face_alive_.size()); ++f) {
    if (!face_alive_[f] || f == outer_face_) continue;
    std::array<int, 3> vs = face_vertices(f);
    if (is_infinite(vs[0]) || is_infinite(vs[1]) || is_infinite(vs[2])) continue;
    std::sort(vs.begin(), vs.end());
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> HalfEdgeMesh::hull_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < int(edge_alive_.size()); ++e) {
    if (!edge_alive_[e]) continue;
    auto [a, b] = edge_vertices(e);
    if (is_infinite(a) || is_infinite(b)) continue;
    const int a0 = apex(e, 0), a1 = apex(e, 1);
    if (is_infinite(a0) || is_infinite(a1)) out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> HalfEdgeMesh::live_edges() const {
  std::vector<int> out;
  for (int e = 0; e < int(edge_alive_.size()); ++e)
    if (edge_alive_[e]) out.push_back(e);
  return out;
}

void HalfEdgeMesh::check_integrity() const {
  int live_e = 0, live_f = 0, live_v = 0;
  std::vector<char> seen_vertex(finite_count_ + 3, 0);
  for (int e = 0; e < int(edge_alive_.size()); ++e) {
    if (!edge_alive_[e]) continue;
    ++live_e;
    for (int s = 0; s < 2; ++s) {
      const int h = 2 * e + s;
      if (half_[h].origin < 0 || half_[h].face < 0 || !face_alive_[half_[h].face])
        throw InconsistentStateError("half-edge with dead face or origin");
      if (next(prev(h)) != h || prev(next(h)) != h)
        throw InconsistentStateError("next/prev mismatch");
      if (half_[h].origin != origin(next(h ^ 1)) && false) {}
      seen_vertex[half_[h].origin] = 1;
    }
  }
  for (int f = 0; f < int(face_alive_.size()); ++f) {
    if (!face_alive_[f]) continue;
    ++live_f;
    const int h = face_half_[f];
    if (next(next(next(h))) != h) throw InconsistentStateError("non-triangular face");
    for (int k = 0, g = h; k < 3; ++k, g = next(g)) {
      if (half_[g].face != f) throw InconsistentStateError("face membership mismatch");
      if (origin(next(g)) != head(g)) throw InconsistentStateError("cycle endpoint mismatch");
    }
  }
  for (char c : seen_vertex) live_v += c;
  if (live_e > 0 && live_v - live_e + live_f != 2)
    throw InconsistentStateError("Euler relation violated");
}

bool ShapeDelaunay::euler_ok() const {
  const size_t v = vertex_ids.size();
  if (v < 3 || edges.empty()) return true;
  return static_cast<long>(v) - static_cast<long>(edges.size()) + face_count == 2;
}

ShapeDelaunay extract_subdivision(const Snapshot& snap, const EdgeSet& edges, std::string tag) {
  ShapeDelaunay out;
  out.tag = std::move(tag);
  out.vertex_ids = snap.ids;
  out.edges = edges;
  if (snap.size() == 1) out.hull = {snap.ids[0]};
  if (edges.empty()) return out;

  const int m = static_cast<int>(edges.size());
  out.halves.resize(2 * m);
  for (int e = 0; e < m; ++e) {
    const int a = snap.index_of(edges[e].first), b = snap.index_of(edges[e].second);
    out.halves[2 * e] = {a, 2 * e + 1, -1, -1};
    out.halves[2 * e + 1] = {b, 2 * e, -1, -1};
  }

  // Sort outgoing half-edges counterclockwise around every vertex; the
  // successor inside a face is the clockwise neighbor of the twin.
  std::vector<std::vector<int>> outgoing(snap.size());
  for (int h = 0; h < 2 * m; ++h) outgoing[out.halves[h].origin].push_back(h);
  std::vector<double> angle(2 * m);
  for (int h = 0; h < 2 * m; ++h) {
    const Vec2 d = snap.pos[out.halves[out.halves[h].twin].origin] - snap.pos[out.halves[h].origin];
    angle[h] = std::atan2(d.y, d.x);
  }
  std::vector<int> rank(2 * m);
  for (auto& ring : outgoing) {
    std::sort(ring.begin(), ring.end(), [&](int a, int b) {
      return angle[a] != angle[b] ? angle[a] < angle[b] : a < b;
    });
    for (size_t r = 0; r < ring.size(); ++r) rank[ring[r]] = static_cast<int>(r);
  }
  for (int h = 0; h < 2 * m; ++h) {
    const int t = out.halves[h].twin;
    const auto& ring = outgoing[out.halves[t].origin];
    const int r = rank[t];
    out.halves[h].next = ring[(r + ring.size() - 1) % ring.size()];
  }

  // Trace face cycles; the cycle with non-positive signed area is unbounded.
  for (int h0 = 0; h0 < 2 * m; ++h0) {
    if (out.halves[h0].face >= 0) continue;
    const int f = out.face_count++;
    double area2 = 0.0;
    int count = 0;
    std::array<int, 3> tri{-1, -1, -1};
    int h = h0;
    do {
      out.halves[h].face = f;
      const Vec2 p = snap.pos[out.halves[h].origin];
      const Vec2 q = snap.pos[out.halves[out.halves[h].twin].origin];
      area2 += cross(p, q);
      if (count < 3) tri[count] = out.halves[h].origin;
      ++count;
      h = out.halves[h].next;
    } while (h != h0);
    if (area2 <= 0.0) {
      out.outer_face = f;
      out.hull.clear();
      h = h0;
      do {
        out.hull.push_back(snap.ids[out.halves[h].origin]);
        h = out.halves[h].next;
      } while (h != h0);
    } else if (count == 3) {
      std::array<int, 3> ids{snap.ids[tri[0]], snap.ids[tri[1]], snap.ids[tri[2]]};
      std::sort(ids.begin(), ids.end());
      out.triangles.push_back(ids);
    } else {
      out.bounded_faces_triangular = false;
    }
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

}  // namespace kds
