#include "stokes0d/mesh.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace stokes0d {

std::string InterfaceId::label() const {
  return "S" + std::to_string(domain) + std::to_string(circuit) + "_" + std::to_string(index);
}

Point outward_normal(Side side) {
  switch (side) {
    case Side::Bottom: return {0.0, -1.0};
    case Side::Right: return {1.0, 0.0};
    case Side::Top: return {0.0, 1.0};
    case Side::Left: return {-1.0, 0.0};
  }
  throw std::logic_error("outward_normal: unknown side");
}

const std::optional<BoundaryTag>& SideLayout::at(Side side) const {
  switch (side) {
    case Side::Bottom: return bottom;
    case Side::Right: return right;
    case Side::Top: return top;
    case Side::Left: return left;
  }
  throw std::logic_error("SideLayout::at: unknown side");
}

TriangleMesh::TriangleMesh(RectDomain domain, std::size_t nx, std::size_t ny, std::vector<Point> vertices,
                           std::vector<std::array<std::size_t, 3>> triangles, std::vector<Edge> edges,
                           std::vector<std::array<std::size_t, 3>> triangle_edges)
    : domain_(domain),
      nx_(nx),
      ny_(ny),
      vertices_(std::move(vertices)),
      triangles_(std::move(triangles)),
      edges_(std::move(edges)),
      triangle_edges_(std::move(triangle_edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = edges_[e].vertices;
    edge_lookup_.emplace(std::minmax(a, b), e);
  }
}

std::size_t TriangleMesh::edge_index(std::size_t a, std::size_t b) const {
  auto it = edge_lookup_.find(std::minmax(a, b));
  if (it == edge_lookup_.end()) {
    throw std::out_of_range("TriangleMesh: no edge between vertices " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
  return it->second;
}

double TriangleMesh::signed_area(std::size_t triangle) const {
  const auto& t = triangles_.at(triangle);
  const Point& p0 = vertices_[t[0]];
  const Point& p1 = vertices_[t[1]];
  const Point& p2 = vertices_[t[2]];
  return 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
}

std::vector<std::size_t> TriangleMesh::boundary_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tag) out.push_back(e);
  }
  return out;
}

std::vector<InterfaceId> TriangleMesh::interfaces() const {
  std::set<InterfaceId> ids;
  for (const auto& e : edges_) {
    if (e.tag && e.tag->kind == BoundaryKind::Interface) ids.insert(*e.tag->interface);
  }
  return {ids.begin(), ids.end()};
}

TriangleMesh build_rect_mesh(RectDomain domain, std::size_t nx, std::size_t ny, const SideLayout& layout) {
  if (!(domain.length > 0.0) || !(domain.height > 0.0)) {
    throw std::invalid_argument("build_rect_mesh: rectangle sides must be positive");
  }
  if (nx == 0 || ny == 0) {
    throw std::invalid_argument("build_rect_mesh: subdivision counts must be at least 1");
  }
  std::set<InterfaceId> seen;
  for (Side side : {Side::Bottom, Side::Right, Side::Top, Side::Left}) {
    const auto& tag = layout.at(side);
    if (!tag) throw std::invalid_argument("build_rect_mesh: layout leaves a side untagged");
    if (tag->kind == BoundaryKind::Interface) {
      if (!tag->interface) throw std::invalid_argument("build_rect_mesh: interface tag without id");
      if (!seen.insert(*tag->interface).second) {
        throw std::invalid_argument("build_rect_mesh: interface " + tag->interface->label() +
                                    " assigned to two sides");
      }
    } else if (tag->interface) {
      throw std::invalid_argument("build_rect_mesh: only interface tags carry an id");
    }
  }

  const std::size_t stride = nx + 1;
  const double hx = domain.length / static_cast<double>(nx);
  const double hy = domain.height / static_cast<double>(ny);

  std::vector<Point> vertices;
  vertices.reserve(stride * (ny + 1));
  for (std::size_t j = 0; j <= ny; ++j) {
    // Pin the last row/column exactly to the rectangle boundary.
    const double y = (j == ny) ? 0.5 * domain.height : -0.5 * domain.height + static_cast<double>(j) * hy;
    for (std::size_t i = 0; i <= nx; ++i) {
      const double x = (i == nx) ? domain.length : static_cast<double>(i) * hx;
      vertices.push_back({x, y});
    }
  }

  std::vector<std::array<std::size_t, 3>> triangles;
  triangles.reserve(2 * nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t v00 = j * stride + i;
      const std::size_t v10 = v00 + 1;
      const std::size_t v01 = v00 + stride;
      const std::size_t v11 = v01 + 1;
      triangles.push_back({v00, v10, v11});
      triangles.push_back({v00, v11, v01});
    }
  }

  auto side_of = [&](std::size_t a, std::size_t b) -> std::optional<Side> {
    const std::size_t ia = a % stride, ja = a / stride;
    const std::size_t ib = b % stride, jb = b / stride;
    if (ja == 0 && jb == 0) return Side::Bottom;
    if (ja == ny && jb == ny) return Side::Top;
    if (ia == 0 && ib == 0) return Side::Left;
    if (ia == nx && ib == nx) return Side::Right;
    return std::nullopt;
  };

  std::vector<Edge> edges;
  std::vector<std::array<std::size_t, 3>> triangle_edges(triangles.size());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t a = triangles[t][k];
      const std::size_t b = triangles[t][(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto [it, inserted] = lookup.emplace(key, edges.size());
      if (inserted) {
        Edge edge;
        edge.vertices = {key.first, key.second};
        edge.side = side_of(a, b);
        if (edge.side) edge.tag = *layout.at(*edge.side);
        edges.push_back(edge);
      }
      triangle_edges[t][k] = it->second;
    }
  }

  return TriangleMesh(domain, nx, ny, std::move(vertices), std::move(triangles), std::move(edges),
                      std::move(triangle_edges));
}

namespace {
const char* kind_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::DirichletWall: return "wall";
    case BoundaryKind::NeumannExternal: return "neumann";
    case BoundaryKind::Interface: return "interface";
  }
  return "?";
}
}  // namespace

void write_mesh(std::ostream& out, const TriangleMesh& mesh) {
  const auto old_precision = out.precision(17);
  out << "VERTICES " << mesh.num_vertices() << '\n';
  for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
    out << i << ' ' << mesh.vertices()[i].x << ' ' << mesh.vertices()[i].y << '\n';
  }
  out << "TRIANGLES " << mesh.num_triangles() << '\n';
  for (const auto& t : mesh.triangles()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  const auto boundary = mesh.boundary_edges();
  out << "BOUNDARY " << boundary.size() << '\n';
  for (std::size_t e : boundary) {
    const Edge& edge = mesh.edges()[e];
    out << edge.vertices[0] << ' ' << edge.vertices[1] << ' ' << kind_name(edge.tag->kind);
    if (edge.tag->interface) {
      const auto& id = *edge.tag->interface;
      out << ' ' << id.domain << ' ' << id.circuit << ' ' << id.index;
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace stokes0d
