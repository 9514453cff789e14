#include <random>

#include "doctest.h"
#include "kds/geometry.hpp"

using namespace kds;

namespace {

Snapshot points(std::vector<Vec2> pos) {
  Snapshot s;
  for (size_t i = 0; i < pos.size(); ++i) s.ids.push_back(static_cast<int>(i));
  s.pos = std::move(pos);
  return s;
}

Snapshot random_snapshot(int n, unsigned seed, double box = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, box);
  std::vector<Vec2> pos;
  pos.reserve(n);
  for (int i = 0; i < n; ++i) pos.push_back({u(rng), u(rng)});
  return points(std::move(pos));
}

}  // namespace

TEST_CASE("wedge_of half-open ranges") {
  CHECK(wedge_of({0, 0}, {1, 0.1}) == 0);
  CHECK(wedge_of({0, 0}, {0, 1}) == 2);  // 90 degrees opens wedge 2
  CHECK(wedge_of({0, 0}, {-1, 0}) == 3);
  CHECK_THROWS_AS(wedge_of({1, 1}, {1, 1}), CoincidentPointsError);
}

TEST_CASE("wedge partition covers every direction exactly once") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const Vec2 d{u(rng), u(rng)};
    if (d.x == 0 && d.y == 0) continue;
    int hits = 0;
    const int l0 = wedge_of({0, 0}, d);
    for (int l = 0; l < 6; ++l) {
      const Vec2 lower = wedge::ray((l + 5) % 6), upper = wedge::ray(l);
      if (cross(lower, d) >= 0 && cross(upper, d) < 0) {
        ++hits;
        CHECK(l == l0);
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("bisector projection") {
  CHECK(bl_coordinate({0, 0}, {2, 1}, 0) == doctest::Approx(2.0));
  CHECK(bl_coordinate({0, 0}, {2, 1}, 3) == doctest::Approx(-2.0));
  CHECK(bl_coordinate({1, 1}, {1, 1}, 4) == 0.0);
}

TEST_CASE("semi-Yao graph basics") {
  CHECK(build_semi_yao(points({{0.5, 0.5}})).edges.empty());

  // Collinear points: the nearer projection wins the wedge-0 in-edge.
  const Snapshot s = points({{0, 0}, {1, 0}, {2, 0}});
  const ProximityGraph g = build_semi_yao(s);
  bool found = false;
  for (const DirectedEdge& e : g.edges)
    if (e.target == 0 && e.wedge == 0) {
      CHECK(e.source == 1);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("semi-Yao equals its per-pair oracle") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const Snapshot s = random_snapshot(20, seed);
    CHECK(build_semi_yao(s).edges == oracle_semi_yao(s).edges);
  }
}

TEST_CASE("semi-Yao edge budget") {
  const Snapshot s = random_snapshot(60, 5);
  CHECK(build_semi_yao(s).edges.size() <= 6u * s.size());
  CHECK(build_yao(s).edges.size() <= 6u * s.size());
}

TEST_CASE("yao graph") {
  const Snapshot tri = points({{0, 0}, {3, 0}, {0, 4}});
  const ProximityGraph yg = build_yao(tri);
  bool found = false;
  for (const DirectedEdge& e : yg.edges)
    if (e.source == 1 && e.target == 0) {
      CHECK(e.wedge == 3);
      found = true;
    }
  CHECK(found);
  CHECK(build_yao(points({{0.1, 0.9}})).edges.empty());
  for (unsigned seed : {4u, 5u}) {
    const Snapshot s = random_snapshot(50, seed);
    CHECK(build_yao(s).edges == oracle_yao(s).edges);
  }
}

TEST_CASE("nearest neighbors from the semi-Yao graph") {
  const Snapshot two = points({{0, 0}, {1, 0}});
  const ProximityGraph nng2 = extract_nng(build_semi_yao(two), two);
  REQUIRE(nng2.edges.size() == 2);
  CHECK(nng2.edges[0].source == 0);
  CHECK(nng2.edges[0].target == 1);
  CHECK(nng2.edges[1].source == 1);
  CHECK(nng2.edges[1].target == 0);

  const Snapshot tri = points({{0, 0}, {3, 0}, {0, 4}});
  const ProximityGraph nng = extract_nng(build_semi_yao(tri), tri);
  for (const DirectedEdge& e : nng.edges)
    if (e.source == 2) CHECK(e.target == 0);  // 4 < 5

  for (unsigned seed : {6u, 7u}) {
    const Snapshot s = random_snapshot(50, seed);
    const ProximityGraph mine = extract_nng(build_semi_yao(s), s);
    const ProximityGraph ref = oracle_nng(s);
    REQUIRE(mine.edges.size() == ref.edges.size());
    for (size_t k = 0; k < mine.edges.size(); ++k) {
      CHECK(mine.edges[k].source == ref.edges[k].source);
      CHECK(mine.edges[k].target == ref.edges[k].target);
    }
  }
}

TEST_CASE("every nearest-neighbor edge is a semi-Yao edge") {
  const Snapshot s = random_snapshot(40, 9);
  const auto syg_pairs = build_semi_yao(s).undirected();
  for (auto [a, b] : extract_nng(build_semi_yao(s), s).undirected())
    CHECK(edge_set_contains(syg_pairs, a, b));
}

TEST_CASE("closest pair") {
  const Snapshot tri = points({{0, 0}, {3, 0}, {0, 4}});
  const ClosestPair cp = closest_pair(tri);
  CHECK(cp.a == 0);
  CHECK(cp.b == 1);
  CHECK(cp.distance == doctest::Approx(3.0));

  CHECK_THROWS_AS(closest_pair(points({{0, 0}})), TooFewPointsError);

  // Two pairs at identical distance: the smaller id pair wins.
  const Snapshot ties = points({{0, 0}, {1, 0}, {10, 0}, {11, 0}});
  const ClosestPair t = closest_pair(ties);
  CHECK(t.a == 0);
  CHECK(t.b == 1);

  const Snapshot s = random_snapshot(100, 10);
  const ClosestPair mine = closest_pair(s);
  const ClosestPair ref = oracle_closest_pair(s);
  CHECK(mine.a == ref.a);
  CHECK(mine.b == ref.b);
  CHECK(mine.distance == doctest::Approx(ref.distance));
}

TEST_CASE("closest pair distance equals shortest nearest-neighbor edge") {
  const Snapshot s = random_snapshot(60, 12);
  const ProximityGraph nng = extract_nng(build_semi_yao(s), s);
  double best = 1e300;
  for (const DirectedEdge& e : nng.edges)
    best = std::min(best, norm(s.pos[s.index_of(e.source)] - s.pos[s.index_of(e.target)]));
  CHECK(closest_pair(s).distance == doctest::Approx(best));
}

TEST_CASE("minimum spanning tree over the Yao graph") {
  const Snapshot tri = points({{0, 0}, {3, 0}, {0, 4}});
  const EmstResult t = build_emst(tri);
  CHECK(t.weight == doctest::Approx(7.0));
  CHECK(t.edges == EdgeSet{{0, 1}, {0, 2}});

  CHECK(build_emst(points({{0.3, 0.7}})).edges.empty());

  for (unsigned seed : {13u, 14u}) {
    const Snapshot s = random_snapshot(100, seed);
    CHECK(build_emst(s).weight == doctest::Approx(oracle_emst(s).weight).epsilon(1e-9));
  }
}

TEST_CASE("emst is contained in the undirected Yao graph") {
  const Snapshot s = random_snapshot(80, 15);
  CHECK(edge_set_subset(build_emst(s).edges, make_edge_set(build_yao(s).undirected())));
}
