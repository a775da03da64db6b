#include "hdgmhd/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

namespace hdgmhd {

int Mesh::num_boundary_facets() const {
  int n = 0;
  for (const auto& f : facets) n += f.boundary ? 1 : 0;
  return n;
}

double Mesh::element_area(int e) const {
  const auto& el = elements[e];
  const Vec2 a = vertices[el[0]], b = vertices[el[1]], c = vertices[el[2]];
  return 0.5 * cross2(b - a, c - a);
}

double Mesh::total_area() const {
  double s = 0.0;
  for (int e = 0; e < int(elements.size()); ++e) s += element_area(e);
  return s;
}

ElementGeometry ElementGeometry::of(const Mesh& mesh, int elem) {
  const auto& el = mesh.elements[elem];
  ElementGeometry g;
  g.p0 = mesh.vertices[el[0]];
  g.J.col(0) = mesh.vertices[el[1]] - g.p0;
  g.J.col(1) = mesh.vertices[el[2]] - g.p0;
  g.detJ = g.J.determinant();
  if (g.detJ <= 0.0) throw std::runtime_error("ElementGeometry: non-positive Jacobian");
  g.Jinv = g.J.inverse();
  g.area = 0.5 * g.detJ;
  for (int i = 0; i < 3; ++i) {
    const Vec2 a = mesh.vertices[el[i]];
    const Vec2 b = mesh.vertices[el[(i + 1) % 3]];
    const Vec2 t = b - a;
    g.edge_length[i] = t.norm();
    // interior lies left of each directed edge of a CCW triangle
    g.edge_normal[i] = Vec2(t.y(), -t.x()) / g.edge_length[i];
  }
  return g;
}

double ElementGeometry::diameter() const {
  return std::max({edge_length[0], edge_length[1], edge_length[2]});
}

void extract_skeleton(Mesh& mesh) {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
  for (int e = 0; e < int(mesh.elements.size()); ++e) {
    const auto& el = mesh.elements[e];
    for (int i = 0; i < 3; ++i) {
      int a = el[i], b = el[(i + 1) % 3];
      if (a > b) std::swap(a, b);
      adj[{a, b}].push_back({e, i});
    }
  }
  mesh.facets.clear();
  mesh.facets.reserve(adj.size());
  mesh.element_facets.assign(mesh.elements.size(), {-1, -1, -1});
  for (const auto& [key, elems] : adj) {  // std::map iterates in lexicographic key order
    if (elems.size() > 2)
      throw std::runtime_error("extract_skeleton: facet with more than two adjacent elements");
    Facet f;
    f.v0 = key.first;
    f.v1 = key.second;
    f.boundary = elems.size() == 1;
    // owner = adjacent element with the smaller index
    auto [e0, l0] = elems[0];
    f.owner = e0;
    f.owner_edge = l0;
    if (elems.size() == 2) {
      auto [e1, l1] = elems[1];
      if (e1 < f.owner) {
        f.neighbor = f.owner;
        f.neighbor_edge = f.owner_edge;
        f.owner = e1;
        f.owner_edge = l1;
      } else {
        f.neighbor = e1;
        f.neighbor_edge = l1;
      }
    }
    const ElementGeometry g = ElementGeometry::of(mesh, f.owner);
    f.normal = g.edge_normal[f.owner_edge];
    f.length = g.edge_length[f.owner_edge];
    const int fid = int(mesh.facets.size());
    mesh.element_facets[f.owner][f.owner_edge] = fid;
    if (f.neighbor >= 0) mesh.element_facets[f.neighbor][f.neighbor_edge] = fid;
    mesh.facets.push_back(f);
  }
  double h = 0.0;
  for (int e = 0; e < int(mesh.elements.size()); ++e)
    h = std::max(h, ElementGeometry::of(mesh, e).diameter());
  mesh.h = h;
}

namespace {

// Splits square cells of a structured grid from top right to bottom left.
// `active(i, j)` filters cells; vertices are shared through an index map.
Mesh build_split_grid(int nx, int ny, double x0, double y0, double dx, double dy,
                      const std::function<bool(int, int)>& active) {
  Mesh mesh;
  std::vector<int> vid((nx + 1) * (ny + 1), -1);
  auto vertex = [&](int i, int j) {
    int& id = vid[j * (nx + 1) + i];
    if (id < 0) {
      id = int(mesh.vertices.size());
      mesh.vertices.push_back(Vec2(x0 + i * dx, y0 + j * dy));
    }
    return id;
  };
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (!active(i, j)) continue;
      const int bl = vertex(i, j), br = vertex(i + 1, j);
      const int tr = vertex(i + 1, j + 1), tl = vertex(i, j + 1);
      mesh.elements.push_back({bl, br, tr});  // diagonal tr -> bl
      mesh.elements.push_back({bl, tr, tl});
    }
  }
  extract_skeleton(mesh);
  return mesh;
}

}  // namespace

Mesh build_hartmann_mesh(int level) {
  if (level < 1) throw std::invalid_argument("build_hartmann_mesh: level must be >= 1");
  const int nx = level, ny = 80 * level;
  return build_split_grid(nx, ny, 0.0, -1.0, 0.025 / level, 2.0 / ny,
                          [](int, int) { return true; });
}

Mesh build_lshaped_mesh(int level) {
  if (level < 1) throw std::invalid_argument("build_lshaped_mesh: level must be >= 1");
  const int n = 2 * level;
  const double d = 1.0 / level;
  // cells of the removed quadrant [0,1) x (-1,0] have i >= level and j < level
  return build_split_grid(n, n, -1.0, -1.0, d, d, [level](int i, int j) {
    return !(i >= level && j < level);
  });
}

void dump_mesh(const Mesh& mesh, std::ostream& os) {
  os << "$vertices " << mesh.vertices.size() << "\n";
  for (int i = 0; i < int(mesh.vertices.size()); ++i)
    os << i << " " << mesh.vertices[i].x() << " " << mesh.vertices[i].y() << "\n";
  os << "$triangles " << mesh.elements.size() << "\n";
  for (int e = 0; e < int(mesh.elements.size()); ++e) {
    const auto& el = mesh.elements[e];
    os << e << " " << el[0] << " " << el[1] << " " << el[2] << "\n";
  }
}

}  // namespace hdgmhd
