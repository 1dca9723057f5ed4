#include "grfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grfem {

bool Mesh::is_boundary_edge(int e) const {
  return std::binary_search(boundary_edges.begin(), boundary_edges.end(), e);
}

Mesh build_rect_mesh(int nx, int ny, double Lx, double Ly) {
  if (nx < 1 || ny < 1)
    throw std::invalid_argument("build_rect_mesh: cell counts must be >= 1");
  if (!(Lx > 0.0) || !(Ly > 0.0))
    throw std::invalid_argument("build_rect_mesh: side lengths must be > 0");

  Mesh m;
  m.nx = nx;
  m.ny = ny;
  m.Lx = Lx;
  m.Ly = Ly;

  const double hx = Lx / nx, hy = Ly / ny;

  m.vertices.reserve((nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      m.vertices.emplace_back(i * hx, j * hy);

  auto vid = [&](int i, int j) { return j * (nx + 1) + i; };

  m.cells.reserve(nx * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.cells.push_back(
          {vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});

  // Horizontal edges first (normal +y), then vertical (normal +x),
  // each block lexicographic with x fastest.
  const int n_h = nx * (ny + 1);
  auto hid = [&](int i, int j) { return j * nx + i; };
  auto vidg = [&](int i, int j) { return n_h + j * (nx + 1) + i; };

  m.edges.resize(n_h + (nx + 1) * ny);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.edges[hid(i, j)] = Edge{vid(i, j), vid(i + 1, j), false};
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i <= nx; ++i)
      m.edges[vidg(i, j)] = Edge{vid(i, j), vid(i, j + 1), true};

  m.cell_edges.reserve(nx * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      m.cell_edges.push_back({CellEdge{hid(i, j), -1.0},      // bottom
                              CellEdge{vidg(i + 1, j), 1.0},  // right
                              CellEdge{hid(i, j + 1), 1.0},   // top
                              CellEdge{vidg(i, j), -1.0}});   // left

  for (int i = 0; i < nx; ++i) {
    m.boundary_edges.push_back(hid(i, 0));
    m.boundary_edges.push_back(hid(i, ny));
  }
  for (int j = 0; j < ny; ++j) {
    m.boundary_edges.push_back(vidg(0, j));
    m.boundary_edges.push_back(vidg(nx, j));
  }
  std::sort(m.boundary_edges.begin(), m.boundary_edges.end());

  return m;
}

Eigen::Vector2d ref_to_phys(const Mesh& mesh, int cell,
                            const Eigen::Vector2d& ref_pt) {
  const Eigen::Vector2d o = mesh.cell_origin(cell);
  return {o.x() + ref_pt.x() * mesh.hx(), o.y() + ref_pt.y() * mesh.hy()};
}

Eigen::Vector2d phys_to_ref(const Mesh& mesh, int cell,
                            const Eigen::Vector2d& phys_pt) {
  const Eigen::Vector2d o = mesh.cell_origin(cell);
  return {(phys_pt.x() - o.x()) / mesh.hx(),
          (phys_pt.y() - o.y()) / mesh.hy()};
}

int locate_cell(const Mesh& mesh, const Eigen::Vector2d& p) {
  const double tol = 1e-12 * std::max(mesh.Lx, mesh.Ly);
  if (p.x() < -tol || p.x() > mesh.Lx + tol || p.y() < -tol ||
      p.y() > mesh.Ly + tol)
    throw std::invalid_argument("locate_cell: point outside mesh domain");
  int i = std::clamp(static_cast<int>(std::floor(p.x() / mesh.hx())), 0,
                     mesh.nx - 1);
  int j = std::clamp(static_cast<int>(std::floor(p.y() / mesh.hy())), 0,
                     mesh.ny - 1);
  return mesh.cell_index(i, j);
}

}  // namespace grfem
