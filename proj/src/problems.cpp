#include "stokes0d/problems.hpp"

#include <stdexcept>
#include <string>

namespace stokes0d {

namespace {

SideLayout layout_for(const ExactSolution& exact, std::size_t domain) {
  SideLayout layout;
  layout.bottom = BoundaryTag::wall();
  layout.top = BoundaryTag::wall();
  const auto set = [&](Side side, BoundaryTag tag) {
    auto& slot = (side == Side::Left) ? layout.left : layout.right;
    if (slot) throw std::logic_error("layout_for: side tagged twice");
    slot = tag;
  };
  if (const auto& side = exact.domains()[domain].external_side) set(*side, BoundaryTag::neumann());
  for (const auto& i : exact.interfaces()) {
    if (i.domain == domain) set(i.side, BoundaryTag::coupling(i.id));
  }
  if (!layout.left) layout.left = BoundaryTag::wall();
  if (!layout.right) layout.right = BoundaryTag::wall();
  return layout;
}

}  // namespace

ExactPtr build_exact(const ParamSet& p, int example, bool nonlinear) {
  switch (example) {
    case 1:
      return example1_exact(p, nonlinear);
    case 2:
      return example2_exact(p);
    case 3:
      return example3_exact(p);
    default:
      throw std::invalid_argument("unknown example " + std::to_string(example));
  }
}

int default_substeps(int example) {
  if (example < 1 || example > 3) throw std::invalid_argument("unknown example " + std::to_string(example));
  return example == 1 ? 5 : 10;
}

Problem build_example(const ParamSet& p, const ExampleOptions& options) {
  p.validate(options.example);
  Problem out;
  out.exact = build_exact(p, options.example, options.nonlinear);
  const bool forced = options.forcing == Forcing::Manufactured;
  const auto& exact = *out.exact;

  out.system.fluid = {p.rho, p.mu};
  for (std::size_t l = 0; l < exact.num_domains(); ++l) {
    auto mesh = build_rect_mesh({p.L, p.H}, options.nx, options.ny, layout_for(exact, l));
    std::vector<ForceTerm> terms;
    TimeSignal pbar;
    if (forced) {
      terms = exact.force_terms(l);
      if (exact.domains()[l].external_side) {
        const ExactPtr keep = out.exact;
        pbar = [keep, l](double t) { return keep->external_pressure(l, t); };
      }
    }
    out.system.domains.emplace_back(std::move(mesh), std::move(terms), std::move(pbar));
  }

  const auto gen = [&](std::size_t j) -> TimeSignal { return forced ? exact.generators().at(j) : TimeSignal{}; };
  switch (options.example) {
    case 1:
      out.system.circuits.push_back(example1_circuit(p, options.nonlinear, gen(0)));
      break;
    case 2:
      out.system.circuits.push_back(example2_circuit(p, gen(0)));
      break;
    default:
      out.system.circuits.push_back(example3_circuit(p, gen(0), gen(1)));
      break;
  }

  const auto& circuit = out.system.circuits.front();
  for (std::size_t k = 0; k < circuit.connections.size(); ++k) {
    const auto& id = circuit.connections[k].interface;
    out.system.bindings.push_back({id, static_cast<std::size_t>(id.domain - 1), 0, k});
  }
  out.system.validate();
  return out;
}

}  // namespace stokes0d
