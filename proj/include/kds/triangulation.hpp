#pragma once

#include <array>

#include "kds/dcel.hpp"
#include "kds/shapes.hpp"

namespace kds {

/// Incremental (conflict-carving) construction of the shape-Delaunay
/// triangulation of a snapshot, in the infinite-vertex mesh form. Vertices of
/// the mesh are snapshot indices.
HalfEdgeMesh build_shape_mesh(const ShapeSystem& sys, const Snapshot& snap);

/// Finite edges of a mesh translated to point ids.
EdgeSet mesh_edge_ids(const HalfEdgeMesh& mesh, const Snapshot& snap);

/// True iff every non-outer face's circumscribing shape is empty of all other
/// points (the defining property, checked face-wise).
bool verify_delaunay_mesh(const ShapeSystem& sys, const Snapshot& snap,
                          const HalfEdgeMesh& mesh, double slack = 1e-9);

/// Tri-shape Delaunay triangulation of one parity, built by restricting the
/// semi-Yao scan to wedges of that parity and extracting faces of the
/// resulting straight-line graph.
ShapeDelaunay build_edt(const Snapshot& snap, int parity, bool checked = false);

struct PieDelaunayResult {
  std::array<ShapeDelaunay, 6> per_sector;
  EdgeSet merged;
};

/// All six pie-Delaunay triangulations plus their union.
PieDelaunayResult build_pie_delaunay(const Snapshot& snap, bool checked = false);

/// Pair predicate: does an empty pie of the given sector pass through both
/// points? Resolved by exact case analysis over the supported minimal pies
/// (two-point extremes and every third-point circumscription).
bool pdt_edge_predicate(const Snapshot& snap, int sector, int i, int j);

EdgeSet oracle_pdt_edges(const Snapshot& snap, int sector);
EdgeSet oracle_pdg_edges(const Snapshot& snap);

}  // namespace kds
