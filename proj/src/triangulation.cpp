#include "kds/triangulation.hpp"

#include <algorithm>
#include <cmath>

namespace kds {

namespace {

unsigned removed_mask_of(const HalfEdgeMesh& mesh, std::array<int, 3> vs) {
  unsigned mask = 0;
  for (int v : vs)
    if (mesh.is_infinite(v)) mask |= 1u << (v - mesh.finite_count());
  return mask;
}

}  // namespace

HalfEdgeMesh build_shape_mesh(const ShapeSystem& sys, const Snapshot& snap) {
  const int n = static_cast<int>(snap.size());
  if (n == 0) {
    HalfEdgeMesh empty;
    return empty;
  }
  HalfEdgeMesh mesh = HalfEdgeMesh::around_first_point(n, 0);
  for (int v = 1; v < n; ++v) {
    const Vec2 w = snap.pos[v];
    auto conflict = [&](int f) {
      const std::array<int, 3> vs = mesh.face_vertices(f);
      const unsigned mask = removed_mask_of(mesh, vs);
      Vec2 fin[3];
      int nf = 0;
      for (int x : vs)
        if (!mesh.is_infinite(x)) fin[nf++] = snap.pos[x];
      return sys.margin(w, std::span<const Vec2>(fin, nf), mask) < 0.0;
    };
    mesh.insert_vertex(v, conflict);
  }
  return mesh;
}

EdgeSet mesh_edge_ids(const HalfEdgeMesh& mesh, const Snapshot& snap) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : mesh.finite_edges()) pairs.emplace_back(snap.ids[a], snap.ids[b]);
  return make_edge_set(std::move(pairs));
}

bool verify_delaunay_mesh(const ShapeSystem& sys, const Snapshot& snap,
                          const HalfEdgeMesh& mesh, double slack) {
  const int n = static_cast<int>(snap.size());
  for (int f = 0; f < mesh.face_count_bound(); ++f) {
    if (!mesh.face_alive(f) || f == mesh.outer_face()) continue;
    const std::array<int, 3> vs = mesh.face_vertices(f);
    const unsigned mask = removed_mask_of(mesh, vs);
    Vec2 fin[3];
    int nf = 0;
    bool member[3] = {false, false, false};
    for (int x : vs)
      if (!mesh.is_infinite(x)) fin[nf++] = snap.pos[x];
    std::array<int, 3> fin_idx{-1, -1, -1};
    nf = 0;
    for (int x : vs)
      if (!mesh.is_infinite(x)) fin_idx[nf++] = x;
    (void)member;
    for (int q = 0; q < n; ++q) {
      if (q == fin_idx[0] || q == fin_idx[1] || q == fin_idx[2]) continue;
      if (sys.margin(snap.pos[q], std::span<const Vec2>(fin, nf), mask) < -slack) return false;
    }
  }
  return true;
}

ShapeDelaunay build_edt(const Snapshot& snap, int parity, bool checked) {
  const ProximityGraph syg = build_semi_yao(snap);
  std::vector<std::pair<int, int>> pairs;
  for (const DirectedEdge& e : syg.edges)
    if ((e.wedge & 1) == parity) pairs.emplace_back(e.source, e.target);
  ShapeDelaunay out =
      extract_subdivision(snap, make_edge_set(std::move(pairs)), "edt" + std::to_string(parity));
  if (checked) {
    if (!out.bounded_faces_triangular || !out.euler_ok())
      throw DegenerateInputError("tri-Delaunay subdivision has a non-triangular bounded face");
    if (out.edges != oracle_edt_edges(snap, parity))
      throw DegenerateInputError("tri-Delaunay edges diverge from the pair predicate");
  }
  return out;
}

PieDelaunayResult build_pie_delaunay(const Snapshot& snap, bool checked) {
  PieDelaunayResult out;
  for (int l = 0; l < 6; ++l) {
    const ShapeSystem sys = ShapeSystem::pie(l);
    const HalfEdgeMesh mesh = build_shape_mesh(sys, snap);
    if (checked && !verify_delaunay_mesh(sys, snap, mesh))
      throw DegenerateInputError("pie-Delaunay face with a non-empty circumscribing shape");
    out.per_sector[l] = extract_subdivision(snap, mesh_edge_ids(mesh, snap),
                                            "pdt" + std::to_string(l));
    out.merged = edge_set_union(out.merged, out.per_sector[l].edges);
  }
  return out;
}

bool pdt_edge_predicate(const Snapshot& snap, int sector, int i, int j) {
  const ShapeSystem sys = ShapeSystem::pie(sector);
  const int n = static_cast<int>(snap.size());
  const Vec2 pi = snap.pos[i], pj = snap.pos[j];
  const double scale = 1.0 + std::max(norm(pi), norm(pj));
  const double eps = 1e-9 * scale;

  auto empty_through = [&](const ShapeSystem::PieShape& s) {
    if (!(s.radius > 0.0)) return false;
    if (sys.pie_margin(pi, s) > eps || sys.pie_margin(pj, s) > eps) return false;
    for (int q = 0; q < n; ++q) {
      if (q == i || q == j) continue;
      if (sys.pie_margin(snap.pos[q], s) < -eps) return false;
    }
    return true;
  };

  const Vec2 u_lo = sys.side_dir_lo(), u_hi = sys.side_dir_hi();

  // Two-point supported extremes.
  {
    // both points on the straight sides
    const double denom = dot(u_lo, sys.side_normal_hi());
    const Vec2 pl[2] = {pi, pj};
    for (int a = 0; a < 2; ++a) {
      const Vec2 lo = pl[a], hi = pl[1 - a];
      const double tau = dot(hi - lo, sys.side_normal_hi()) / denom;
      ShapeSystem::PieShape s;
      s.apex = lo + u_lo * tau;
      const double f_lo = dot(lo - s.apex, u_lo), f_hi = dot(hi - s.apex, u_hi);
      if (f_lo < -eps || f_hi < -eps) continue;
      s.radius = std::max(f_lo, f_hi);
      if (empty_through(s)) return true;
    }
    // apex at one point, the other on the arc
    for (int a = 0; a < 2; ++a) {
      ShapeSystem::PieShape s;
      s.apex = pl[a];
      s.radius = norm(pl[1 - a] - s.apex);
      if (!sys.dir_in_sector(pl[1 - a] - s.apex, 1e-9)) continue;
      if (empty_through(s)) return true;
    }
    // one point at a side's outer corner, the other on the arc
    for (int side = 0; side < 2; ++side) {
      const Vec2 u = side == 0 ? u_lo : u_hi;
      for (int a = 0; a < 2; ++a) {
        const Vec2 X = pl[a], Y = pl[1 - a];
        const double denom2 = 2.0 * dot(Y - X, u);
        if (std::abs(denom2) < 1e-14 * scale) continue;
        const double tau = -sqnorm(Y - X) / denom2;
        if (tau < -eps) continue;
        ShapeSystem::PieShape s;
        s.apex = X - u * tau;
        s.radius = tau;
        if (!sys.dir_in_sector(Y - s.apex, 1e-9)) continue;
        if (empty_through(s)) return true;
      }
    }
  }

  // Third-point circumscriptions.
  for (int q = 0; q < n; ++q) {
    if (q == i || q == j) continue;
    if (auto s = sys.circumscribing_pie(pi, pj, snap.pos[q]); s && empty_through(*s)) return true;
  }
  return false;
}

EdgeSet oracle_pdt_edges(const Snapshot& snap, int sector) {
  const int n = static_cast<int>(snap.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pdt_edge_predicate(snap, sector, i, j)) pairs.emplace_back(snap.ids[i], snap.ids[j]);
  return make_edge_set(std::move(pairs));
}

EdgeSet oracle_pdg_edges(const Snapshot& snap) {
  EdgeSet out;
  for (int l = 0; l < 6; ++l) out = edge_set_union(out, oracle_pdt_edges(snap, l));
  return out;
}

}  // namespace kds
