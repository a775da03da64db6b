#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "hdgmhd/cross2d.hpp"

namespace hdgmhd {

// Oriented facet (edge) of the skeleton. Vertices are stored with v0 < v1 and
// the tangent runs v0 -> v1 on both sides of the facet. The stored normal is
// outward with respect to the owner (the adjacent element of smaller index);
// the neighbor sees its negation.
struct Facet {
  int v0 = -1, v1 = -1;
  int owner = -1;
  int neighbor = -1;       // -1 on the boundary
  int owner_edge = -1;     // owner's local edge index (0..2)
  int neighbor_edge = -1;
  Vec2 normal = Vec2::Zero();
  double length = 0.0;
  bool boundary = false;

  Vec2 tangent_unit(const std::vector<Vec2>& vertices) const {
    return (vertices[v1] - vertices[v0]).normalized();
  }
};

struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> elements;       // CCW vertex triples
  std::vector<Facet> facets;                      // lexicographic (v0, v1) order
  std::vector<std::array<int, 3>> element_facets; // facet id per local edge i=(v_i, v_{i+1})
  double h = 0.0;                                 // max element diameter

  int num_boundary_facets() const;
  int num_interior_facets() const { return int(facets.size()) - num_boundary_facets(); }
  double element_area(int e) const;
  double total_area() const;
};

// Affine reference-to-physical map data for one triangle.
struct ElementGeometry {
  Vec2 p0;
  Mat2 J;        // columns (p1 - p0), (p2 - p0)
  Mat2 Jinv;
  double detJ = 0.0;
  double area = 0.0;
  std::array<Vec2, 3> edge_normal;   // outward unit normal per local edge
  std::array<double, 3> edge_length;

  static ElementGeometry of(const Mesh& mesh, int elem);

  Vec2 map(const Vec2& ref) const { return p0 + J * ref; }
  Vec2 unmap(const Vec2& phys) const { return Jinv * (phys - p0); }
  double diameter() const;
};

// Channel [0, 0.025] x [-1, 1], level x 80*level squares, each split from
// top right to bottom left. 160*level^2 triangles.
Mesh build_hartmann_mesh(int level);

// L-shaped domain (-1,1)^2 \ [0,1)x(-1,0], three quadrants of level x level
// squares with the same diagonal split. 6*level^2 triangles.
Mesh build_lshaped_mesh(int level);

// Deduplicates edges, classifies boundary/interior, fixes owner-outward
// normals. Called by the builders; exposed for tests and custom meshes.
// Throws std::runtime_error if an edge has more than two adjacent elements.
void extract_skeleton(Mesh& mesh);

// Plain-text dump: $vertices (index x y) and $triangles (index v0 v1 v2).
void dump_mesh(const Mesh& mesh, std::ostream& os);

}  // namespace hdgmhd
