#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stokes0d {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Rectangle (0, length) x (-height/2, height/2), lengths in cm.
struct RectDomain {
  double length = 0.0;
  double height = 0.0;
};

/// Names the interface S_{lm,k}: domain l, circuit m, connection k (all 1-based).
struct InterfaceId {
  int domain = 0;
  int circuit = 0;
  int index = 0;

  auto operator<=>(const InterfaceId&) const = default;
  std::string label() const;
};

enum class BoundaryKind { DirichletWall, NeumannExternal, Interface };

struct BoundaryTag {
  BoundaryKind kind = BoundaryKind::DirichletWall;
  std::optional<InterfaceId> interface;

  static BoundaryTag wall() { return {BoundaryKind::DirichletWall, std::nullopt}; }
  static BoundaryTag neumann() { return {BoundaryKind::NeumannExternal, std::nullopt}; }
  static BoundaryTag coupling(InterfaceId id) { return {BoundaryKind::Interface, id}; }

  bool operator==(const BoundaryTag&) const = default;
};

enum class Side { Bottom, Right, Top, Left };

/// Outward unit normal of a rectangle side.
Point outward_normal(Side side);

/// One tag per rectangle side. A side left empty is rejected by build_rect_mesh.
struct SideLayout {
  std::optional<BoundaryTag> bottom;
  std::optional<BoundaryTag> right;
  std::optional<BoundaryTag> top;
  std::optional<BoundaryTag> left;

  const std::optional<BoundaryTag>& at(Side side) const;
};

struct Edge {
  std::array<std::size_t, 2> vertices{};
  std::optional<Side> side;
  std::optional<BoundaryTag> tag;
};

/// Structured triangulation of a rectangle; immutable after construction.
///
/// Triangles are counterclockwise. Local edge k of a triangle joins local
/// vertices k and (k+1) mod 3, and triangle_edges() follows that convention.
class TriangleMesh {
 public:
  TriangleMesh(RectDomain domain, std::size_t nx, std::size_t ny, std::vector<Point> vertices,
               std::vector<std::array<std::size_t, 3>> triangles, std::vector<Edge> edges,
               std::vector<std::array<std::size_t, 3>> triangle_edges);

  const RectDomain& domain() const { return domain_; }
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::array<std::size_t, 3>>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::array<std::size_t, 3>>& triangle_edges() const { return triangle_edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_triangles() const { return triangles_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  /// Edge joining two vertices, in either order. Throws if absent.
  std::size_t edge_index(std::size_t a, std::size_t b) const;

  double signed_area(std::size_t triangle) const;

  /// Indices of all edges carrying a boundary tag.
  std::vector<std::size_t> boundary_edges() const;

  /// Distinct interface ids present on the boundary, sorted.
  std::vector<InterfaceId> interfaces() const;

 private:
  RectDomain domain_;
  std::size_t nx_;
  std::size_t ny_;
  std::vector<Point> vertices_;
  std::vector<std::array<std::size_t, 3>> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::array<std::size_t, 3>> triangle_edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
};

/// Splits each of the nx*ny grid cells along its lower-left to upper-right
/// diagonal and tags boundary edges side by side.
TriangleMesh build_rect_mesh(RectDomain domain, std::size_t nx, std::size_t ny, const SideLayout& layout);

/// Plain-text dump with VERTICES, TRIANGLES and BOUNDARY sections.
void write_mesh(std::ostream& out, const TriangleMesh& mesh);

}  // namespace stokes0d
