#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "stokes0d/mesh.hpp"
#include "stokes0d/sparse.hpp"

namespace stokes0d {

using VectorField = std::function<Point(Point, double)>;
using ScalarField = std::function<double(Point, double)>;

/// P2 velocity / P1 pressure degrees of freedom on a triangle mesh.
///
/// Quadratic nodes are the mesh vertices followed by the edge midpoints.
/// Velocity dof of (node, component c) is c * num_nodes() + node; pressure
/// dofs coincide with vertices.
class StokesSpace {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit StokesSpace(const TriangleMesh& mesh);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t velocity_dofs() const { return 2 * nodes_.size(); }
  std::size_t pressure_dofs() const { return num_vertices_; }
  std::size_t velocity_dof(std::size_t node, int component) const {
    return static_cast<std::size_t>(component) * nodes_.size() + node;
  }

  const Point& node(std::size_t i) const { return nodes_[i]; }
  /// Local order: three vertices, then midpoints of edges (0,1), (1,2), (2,0).
  const std::array<std::size_t, 6>& element_nodes(std::size_t triangle) const { return element_nodes_[triangle]; }

  bool constrained(std::size_t velocity_dof) const { return constrained_[velocity_dof]; }
  std::size_t num_constrained() const { return velocity_dofs() - free_dofs_.size(); }
  /// Velocity dofs not fixed by the wall condition, ascending.
  const std::vector<std::size_t>& free_dofs() const { return free_dofs_; }
  /// Position of a velocity dof within free_dofs(), or npos when constrained.
  std::size_t free_index(std::size_t velocity_dof) const { return free_index_[velocity_dof]; }

 private:
  std::size_t num_vertices_;
  std::vector<Point> nodes_;
  std::vector<std::array<std::size_t, 6>> element_nodes_;
  std::vector<bool> constrained_;
  std::vector<std::size_t> free_dofs_;
  std::vector<std::size_t> free_index_;
};

StokesSpace build_space(const TriangleMesh& mesh);

/// Discrete Stokes operators. Rows of `divergence` are pressure tests,
/// columns velocity dofs; none of the matrices has wall rows removed.
struct AssembledOperators {
  CompressedMatrix mass;           // int phi_i . phi_j
  CompressedMatrix stiffness;      // int grad phi_i : grad phi_j
  CompressedMatrix divergence;     // int psi_q div phi_i
  CompressedMatrix pressure_mass;  // int psi_q psi_r
  std::map<InterfaceId, Vector> interface_flux;  // int_{S_k} phi_i . n
  Vector neumann_load;                           // int_Sigma phi_i . n, all Neumann sides
};

AssembledOperators assemble_operators(const StokesSpace& space, const TriangleMesh& mesh);

/// Entries int_{edges} phi_i . n over boundary edges whose tag satisfies `select`.
Vector assemble_boundary_flux(const StokesSpace& space, const TriangleMesh& mesh,
                              const std::function<bool(const BoundaryTag&)>& select);

/// Entries int_Omega f(., t) . phi_i with the degree-6 rule.
Vector assemble_body_force(const StokesSpace& space, const TriangleMesh& mesh, const VectorField& f, double t);

struct FieldNorms {
  double velocity = 0.0;  // ||v||_L2
  double gradient = 0.0;  // ||grad v||_L2
  double pressure = 0.0;  // ||p||_L2
};

FieldNorms l2_norms(const StokesSpace& space, const AssembledOperators& ops, const Vector& velocity,
                    const Vector& pressure);

Vector interpolate_velocity(const StokesSpace& space, const VectorField& field, double t);
Vector interpolate_pressure(const StokesSpace& space, const TriangleMesh& mesh, const ScalarField& field, double t);

/// Velocity at a point of a given triangle, from barycentric coordinates.
Point evaluate_velocity(const StokesSpace& space, const Vector& velocity, std::size_t triangle,
                        const std::array<double, 3>& bary);

}  // namespace stokes0d
