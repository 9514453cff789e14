#include <random>

#include "doctest.h"
#include "kds/triangulation.hpp"

using namespace kds;

namespace {

Snapshot points(std::vector<Vec2> pos) {
  Snapshot s;
  for (size_t i = 0; i < pos.size(); ++i) s.ids.push_back(static_cast<int>(i));
  s.pos = std::move(pos);
  return s;
}

Snapshot random_snapshot(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec2> pos;
  for (int i = 0; i < n; ++i) pos.push_back({u(rng), u(rng)});
  return points(std::move(pos));
}

}  // namespace

TEST_CASE("three points make one triangle") {
  const Snapshot s = points({{0, 0}, {1, 0.1}, {0.4, 0.9}});
  for (int parity : {0, 1}) {
    const ShapeDelaunay d = build_edt(s, parity, true);
    CHECK(d.triangles.size() == 1);
    CHECK(d.edges.size() == 3);
    CHECK(d.hull.size() == 3);
    CHECK(d.euler_ok());
  }
}

TEST_CASE("four points in convex position: five edges, two triangles") {
  const Snapshot s = points({{0, 0}, {1, 0.05}, {1.1, 0.95}, {-0.1, 1.02}});
  const ShapeDelaunay d = build_edt(s, 0, true);
  CHECK(d.edges.size() == 5);
  CHECK(d.triangles.size() == 2);
  CHECK(d.hull.size() == 4);
  CHECK(d.edges == oracle_edt_edges(s, 0));
}

TEST_CASE("tri-Delaunay edges equal the pair predicate on random input") {
  for (unsigned seed : {21u, 22u, 23u}) {
    const Snapshot s = random_snapshot(30, seed);
    for (int parity : {0, 1}) {
      const ShapeDelaunay d = build_edt(s, parity);
      CHECK(d.bounded_faces_triangular);
      CHECK(d.euler_ok());
      CHECK(d.edges == oracle_edt_edges(s, parity));
      CHECK(d.edges.size() <= 3 * s.size() - 6);
    }
  }
}

TEST_CASE("two points give one edge in exactly one parity") {
  const Snapshot s = points({{0, 0}, {1, 0.2}});
  const int l = wedge_of(s.pos[0], s.pos[1]);
  const ShapeDelaunay mine = build_edt(s, l & 1);
  CHECK(mine.edges == EdgeSet{{0, 1}});
  const ShapeDelaunay other = build_edt(s, 1 - (l & 1));
  // The reverse direction may land in a wedge of either parity depending on
  // the angle; the union always contains the edge.
  CHECK(edge_set_union(mine.edges, other.edges) == EdgeSet{{0, 1}});
}

TEST_CASE("equilateral-style triangle keeps all edges across the parity union") {
  const Snapshot s = points({{0, 0}, {1, 0.02}, {0.51, 0.88}});
  const EdgeSet both = edge_set_union(oracle_edt_edges(s, 0), oracle_edt_edges(s, 1));
  CHECK(both == EdgeSet{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("semi-Yao graph equals the union of the two parities") {
  for (unsigned seed : {31u, 32u, 33u}) {
    const Snapshot s = random_snapshot(30, seed);
    const EdgeSet syg = make_edge_set(build_semi_yao(s).undirected());
    CHECK(syg == edge_set_union(oracle_edt_edges(s, 0), oracle_edt_edges(s, 1)));
    CHECK(syg == edge_set_union(build_edt(s, 0).edges, build_edt(s, 1).edges));
  }
}

TEST_CASE("incremental mesh matches the scan-derived triangulation") {
  for (unsigned seed : {41u, 42u, 43u, 44u}) {
    const Snapshot s = random_snapshot(25, seed);
    for (int parity : {0, 1}) {
      const ShapeSystem sys = ShapeSystem::tri(parity);
      const HalfEdgeMesh mesh = build_shape_mesh(sys, s);
      mesh.check_integrity();
      CHECK(verify_delaunay_mesh(sys, s, mesh));
      const ShapeDelaunay ref = build_edt(s, parity);
      CHECK(mesh_edge_ids(mesh, s) == ref.edges);
      // faces too
      std::vector<std::array<int, 3>> tris;
      for (auto t : mesh.finite_triangles())
        tris.push_back({s.ids[t[0]], s.ids[t[1]], s.ids[t[2]]});
      CHECK(tris == ref.triangles);
    }
  }
}

TEST_CASE("pie-Delaunay of a triangle") {
  const Snapshot s = points({{0, 0}, {1, 0.1}, {0.4, 0.9}});
  const PieDelaunayResult r = build_pie_delaunay(s, true);
  for (const ShapeDelaunay& d : r.per_sector) CHECK(d.triangles.size() == 1);
  CHECK(r.merged.size() == 3);
}

TEST_CASE("pie-Delaunay equals the shrink oracle") {
  for (unsigned seed : {51u, 52u}) {
    const Snapshot s = random_snapshot(20, seed);
    const PieDelaunayResult r = build_pie_delaunay(s, true);
    for (int l = 0; l < 6; ++l) {
      CHECK(r.per_sector[l].edges == oracle_pdt_edges(s, l));
      CHECK(r.per_sector[l].euler_ok());
      CHECK(r.per_sector[l].bounded_faces_triangular);
    }
    CHECK(r.merged == oracle_pdg_edges(s));
  }
}

TEST_CASE("yao graph is contained in the pie-Delaunay graph") {
  for (unsigned seed : {53u, 54u}) {
    const Snapshot s = random_snapshot(20, seed);
    const PieDelaunayResult r = build_pie_delaunay(s);
    CHECK(edge_set_subset(make_edge_set(build_yao(s).undirected()), r.merged));
  }
}

TEST_CASE("containment chain: emst within yao within pie-Delaunay") {
  const Snapshot s = random_snapshot(20, 55);
  const EdgeSet yao = make_edge_set(build_yao(s).undirected());
  CHECK(edge_set_subset(build_emst(s).edges, yao));
  CHECK(edge_set_subset(yao, build_pie_delaunay(s).merged));
}
