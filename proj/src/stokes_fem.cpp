#include "stokes0d/stokes_fem.hpp"

#include <cmath>
#include <stdexcept>

#include "stokes0d/quadrature.hpp"

namespace stokes0d {

namespace {

struct ElementGeometry {
  std::array<Point, 3> vertices;
  std::array<Point, 3> grad_lambda;
  double area = 0.0;

  Point map(const std::array<double, 3>& bary) const {
    return {bary[0] * vertices[0].x + bary[1] * vertices[1].x + bary[2] * vertices[2].x,
            bary[0] * vertices[0].y + bary[1] * vertices[1].y + bary[2] * vertices[2].y};
  }
};

ElementGeometry geometry(const TriangleMesh& mesh, std::size_t t) {
  ElementGeometry g;
  const auto& tri = mesh.triangles()[t];
  for (int i = 0; i < 3; ++i) g.vertices[i] = mesh.vertices()[tri[i]];
  const auto& [p0, p1, p2] = g.vertices;
  const double twice = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
  if (!(twice > 0.0)) throw std::invalid_argument("stokes_fem: degenerate or clockwise triangle");
  g.area = 0.5 * twice;
  g.grad_lambda[0] = {(p1.y - p2.y) / twice, (p2.x - p1.x) / twice};
  g.grad_lambda[1] = {(p2.y - p0.y) / twice, (p0.x - p2.x) / twice};
  g.grad_lambda[2] = {(p0.y - p1.y) / twice, (p1.x - p0.x) / twice};
  return g;
}

std::array<double, 6> p2_values(const std::array<double, 3>& l) {
  return {l[0] * (2.0 * l[0] - 1.0), l[1] * (2.0 * l[1] - 1.0), l[2] * (2.0 * l[2] - 1.0),
          4.0 * l[0] * l[1],         4.0 * l[1] * l[2],         4.0 * l[2] * l[0]};
}

std::array<Point, 6> p2_gradients(const std::array<double, 3>& l, const std::array<Point, 3>& gl) {
  std::array<Point, 6> g;
  for (int i = 0; i < 3; ++i) {
    const double c = 4.0 * l[i] - 1.0;
    g[i] = {c * gl[i].x, c * gl[i].y};
  }
  for (int k = 0; k < 3; ++k) {
    const int i = k, j = (k + 1) % 3;
    g[3 + k] = {4.0 * (l[i] * gl[j].x + l[j] * gl[i].x), 4.0 * (l[i] * gl[j].y + l[j] * gl[i].y)};
  }
  return g;
}

}  // namespace

StokesSpace::StokesSpace(const TriangleMesh& mesh) : num_vertices_(mesh.num_vertices()) {
  const std::size_t nv = mesh.num_vertices();
  nodes_ = mesh.vertices();
  nodes_.reserve(nv + mesh.num_edges());
  for (const Edge& e : mesh.edges()) {
    const Point& a = mesh.vertices()[e.vertices[0]];
    const Point& b = mesh.vertices()[e.vertices[1]];
    nodes_.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
  }

  element_nodes_.resize(mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangles()[t];
    const auto& te = mesh.triangle_edges()[t];
    element_nodes_[t] = {tri[0], tri[1], tri[2], nv + te[0], nv + te[1], nv + te[2]};
  }

  constrained_.assign(velocity_dofs(), false);
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edges()[e];
    if (!edge.tag || edge.tag->kind != BoundaryKind::DirichletWall) continue;
    for (std::size_t node : {edge.vertices[0], edge.vertices[1], nv + e}) {
      constrained_[velocity_dof(node, 0)] = true;
      constrained_[velocity_dof(node, 1)] = true;
    }
  }
  free_index_.assign(velocity_dofs(), npos);
  for (std::size_t d = 0; d < velocity_dofs(); ++d) {
    if (!constrained_[d]) {
      free_index_[d] = free_dofs_.size();
      free_dofs_.push_back(d);
    }
  }
}

StokesSpace build_space(const TriangleMesh& mesh) { return StokesSpace(mesh); }

AssembledOperators assemble_operators(const StokesSpace& space, const TriangleMesh& mesh) {
  const std::size_t nv = space.velocity_dofs();
  const std::size_t np = space.pressure_dofs();
  TripletMatrix mass(nv, nv), stiffness(nv, nv), divergence(np, nv), pmass(np, np);
  mass.reserve(mesh.num_triangles() * 72);
  stiffness.reserve(mesh.num_triangles() * 72);
  divergence.reserve(mesh.num_triangles() * 36);
  pmass.reserve(mesh.num_triangles() * 9);

  const TriangleRule& rule = triangle_rule(4);
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const ElementGeometry g = geometry(mesh, t);
    const auto& nodes = space.element_nodes(t);
    const auto& tri = mesh.triangles()[t];

    double m[6][6] = {}, k[6][6] = {};
    double dx[3][6] = {}, dy[3][6] = {};
    double pm[3][3] = {};
    for (std::size_t q = 0; q < rule.weights.size(); ++q) {
      const auto& l = rule.points[q];
      const double w = rule.weights[q] * g.area;
      const auto phi = p2_values(l);
      const auto grad = p2_gradients(l, g.grad_lambda);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          m[i][j] += w * phi[i] * phi[j];
          k[i][j] += w * (grad[i].x * grad[j].x + grad[i].y * grad[j].y);
        }
      }
      for (int a = 0; a < 3; ++a) {
        for (int j = 0; j < 6; ++j) {
          dx[a][j] += w * l[a] * grad[j].x;
          dy[a][j] += w * l[a] * grad[j].y;
        }
        for (int b = 0; b < 3; ++b) pm[a][b] += w * l[a] * l[b];
      }
    }

    for (int c = 0; c < 2; ++c) {
      for (int i = 0; i < 6; ++i) {
        const std::size_t row = space.velocity_dof(nodes[i], c);
        for (int j = 0; j < 6; ++j) {
          const std::size_t col = space.velocity_dof(nodes[j], c);
          mass.add(row, col, m[i][j]);
          stiffness.add(row, col, k[i][j]);
        }
      }
    }
    for (int a = 0; a < 3; ++a) {
      for (int j = 0; j < 6; ++j) {
        divergence.add(tri[a], space.velocity_dof(nodes[j], 0), dx[a][j]);
        divergence.add(tri[a], space.velocity_dof(nodes[j], 1), dy[a][j]);
      }
      for (int b = 0; b < 3; ++b) pmass.add(tri[a], tri[b], pm[a][b]);
    }
  }

  AssembledOperators ops;
  ops.mass = compress(mass);
  ops.stiffness = compress(stiffness);
  ops.divergence = compress(divergence);
  ops.pressure_mass = compress(pmass);
  for (const InterfaceId& id : mesh.interfaces()) {
    ops.interface_flux.emplace(id, assemble_boundary_flux(space, mesh, [id](const BoundaryTag& tag) {
                                 return tag.kind == BoundaryKind::Interface && tag.interface == id;
                               }));
  }
  ops.neumann_load = assemble_boundary_flux(
      space, mesh, [](const BoundaryTag& tag) { return tag.kind == BoundaryKind::NeumannExternal; });
  return ops;
}

Vector assemble_boundary_flux(const StokesSpace& space, const TriangleMesh& mesh,
                              const std::function<bool(const BoundaryTag&)>& select) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(space.velocity_dofs()));
  const LineRule rule = gauss_legendre(3);
  const std::size_t nv = mesh.num_vertices();
  for (std::size_t e : mesh.boundary_edges()) {
    const Edge& edge = mesh.edges()[e];
    if (!select(*edge.tag)) continue;
    const Point n = outward_normal(*edge.side);
    const Point& a = mesh.vertices()[edge.vertices[0]];
    const Point& b = mesh.vertices()[edge.vertices[1]];
    const double length = std::hypot(b.x - a.x, b.y - a.y);
    double integrals[3] = {};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double s = rule.points[q];
      const double w = rule.weights[q] * length;
      integrals[0] += w * (1.0 - s) * (1.0 - 2.0 * s);
      integrals[1] += w * s * (2.0 * s - 1.0);
      integrals[2] += w * 4.0 * s * (1.0 - s);
    }
    const std::size_t nodes[3] = {edge.vertices[0], edge.vertices[1], nv + e};
    for (int i = 0; i < 3; ++i) {
      out[static_cast<Eigen::Index>(space.velocity_dof(nodes[i], 0))] += integrals[i] * n.x;
      out[static_cast<Eigen::Index>(space.velocity_dof(nodes[i], 1))] += integrals[i] * n.y;
    }
  }
  return out;
}

Vector assemble_body_force(const StokesSpace& space, const TriangleMesh& mesh, const VectorField& f, double t) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(space.velocity_dofs()));
  const TriangleRule& rule = triangle_rule(6);
  for (std::size_t tri = 0; tri < mesh.num_triangles(); ++tri) {
    const ElementGeometry g = geometry(mesh, tri);
    const auto& nodes = space.element_nodes(tri);
    for (std::size_t q = 0; q < rule.weights.size(); ++q) {
      const auto& l = rule.points[q];
      const double w = rule.weights[q] * g.area;
      const Point value = f(g.map(l), t);
      const auto phi = p2_values(l);
      for (int i = 0; i < 6; ++i) {
        out[static_cast<Eigen::Index>(space.velocity_dof(nodes[i], 0))] += w * value.x * phi[i];
        out[static_cast<Eigen::Index>(space.velocity_dof(nodes[i], 1))] += w * value.y * phi[i];
      }
    }
  }
  return out;
}

FieldNorms l2_norms(const StokesSpace& space, const AssembledOperators& ops, const Vector& velocity,
                    const Vector& pressure) {
  if (static_cast<std::size_t>(velocity.size()) != space.velocity_dofs() ||
      static_cast<std::size_t>(pressure.size()) != space.pressure_dofs()) {
    throw std::invalid_argument("l2_norms: coefficient vector sizes do not match the space");
  }
  FieldNorms n;
  n.velocity = std::sqrt(std::max(0.0, ops.mass.bilinear(velocity, velocity)));
  n.gradient = std::sqrt(std::max(0.0, ops.stiffness.bilinear(velocity, velocity)));
  n.pressure = std::sqrt(std::max(0.0, ops.pressure_mass.bilinear(pressure, pressure)));
  return n;
}

Vector interpolate_velocity(const StokesSpace& space, const VectorField& field, double t) {
  Vector out(static_cast<Eigen::Index>(space.velocity_dofs()));
  for (std::size_t i = 0; i < space.num_nodes(); ++i) {
    const Point v = field(space.node(i), t);
    out[static_cast<Eigen::Index>(space.velocity_dof(i, 0))] = v.x;
    out[static_cast<Eigen::Index>(space.velocity_dof(i, 1))] = v.y;
  }
  return out;
}

Vector interpolate_pressure(const StokesSpace& space, const TriangleMesh& mesh, const ScalarField& field, double t) {
  Vector out(static_cast<Eigen::Index>(space.pressure_dofs()));
  for (std::size_t i = 0; i < mesh.num_vertices(); ++i) out[static_cast<Eigen::Index>(i)] = field(mesh.vertices()[i], t);
  return out;
}

Point evaluate_velocity(const StokesSpace& space, const Vector& velocity, std::size_t triangle,
                        const std::array<double, 3>& bary) {
  const auto phi = p2_values(bary);
  const auto& nodes = space.element_nodes(triangle);
  Point v;
  for (int i = 0; i < 6; ++i) {
    v.x += phi[i] * velocity[static_cast<Eigen::Index>(space.velocity_dof(nodes[i], 0))];
    v.y += phi[i] * velocity[static_cast<Eigen::Index>(space.velocity_dof(nodes[i], 1))];
  }
  return v;
}

}  // namespace stokes0d
