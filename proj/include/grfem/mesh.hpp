#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace grfem {

/// A mesh edge. Global normals are fixed once and for all: +x for vertical
/// edges, +y for horizontal ones, so edge-based degrees of freedom carry an
/// orientation that does not depend on which adjacent cell looks at them.
struct Edge {
  int v0 = -1;
  int v1 = -1;
  bool vertical = false;
  Eigen::Vector2d normal() const {
    return vertical ? Eigen::Vector2d(1.0, 0.0) : Eigen::Vector2d(0.0, 1.0);
  }
};

/// (edge index, sign) pair; sign is +1 when the global normal coincides with
/// the cell's outward normal on that edge.
struct CellEdge {
  int edge = -1;
  double sign = 0.0;
};

/// Structured axis-aligned rectangular mesh of [0,Lx] x [0,Ly].
/// Immutable after construction. All indices are lexicographic, x fastest.
struct Mesh {
  int nx = 0, ny = 0;
  double Lx = 0.0, Ly = 0.0;

  std::vector<Eigen::Vector2d> vertices;
  std::vector<std::array<int, 4>> cells;  // ccw, starting lower-left
  std::vector<Edge> edges;
  // per cell: bottom, right, top, left
  std::vector<std::array<CellEdge, 4>> cell_edges;
  std::vector<int> boundary_edges;

  int n_cells() const { return nx * ny; }
  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }

  double hx() const { return Lx / nx; }
  double hy() const { return Ly / ny; }
  /// Cell diameter, identical for every cell of the uniform mesh.
  double h() const { return std::sqrt(hx() * hx() + hy() * hy()); }

  int cell_index(int i, int j) const { return j * nx + i; }
  /// Lower-left corner of cell c.
  Eigen::Vector2d cell_origin(int c) const {
    const int i = c % nx, j = c / nx;
    return {i * hx(), j * hy()};
  }
  Eigen::Vector2d cell_center(int c) const {
    return cell_origin(c) + 0.5 * Eigen::Vector2d(hx(), hy());
  }

  bool is_boundary_edge(int e) const;
  double edge_length(int e) const { return edges[e].vertical ? hy() : hx(); }
  /// Start point of an edge in its global arc-length parameterization
  /// (left end for horizontal edges, bottom end for vertical ones).
  Eigen::Vector2d edge_start(int e) const { return vertices[edges[e].v0]; }
  Eigen::Vector2d edge_tangent(int e) const {
    return edges[e].vertical ? Eigen::Vector2d(0.0, 1.0)
                             : Eigen::Vector2d(1.0, 0.0);
  }
};

/// Builds the uniform nx x ny decomposition of [0,Lx] x [0,Ly].
/// Throws std::invalid_argument for non-positive counts or lengths.
Mesh build_rect_mesh(int nx, int ny, double Lx, double Ly);

/// Affine map from the reference square [0,1]^2 onto a cell.
Eigen::Vector2d ref_to_phys(const Mesh& mesh, int cell,
                            const Eigen::Vector2d& ref_pt);

/// Inverse of ref_to_phys on the given cell.
Eigen::Vector2d phys_to_ref(const Mesh& mesh, int cell,
                            const Eigen::Vector2d& phys_pt);

/// Containing cell of a point in [0,Lx] x [0,Ly] (closed domain; points on
/// upper boundaries are clamped into the last cell). Throws if outside.
int locate_cell(const Mesh& mesh, const Eigen::Vector2d& phys_pt);

}  // namespace grfem
