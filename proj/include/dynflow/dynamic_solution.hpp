#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynflow/network.hpp"
#include "dynflow/time_expanded.hpp"

namespace dynflow {

/// Per-edge inflow rate. The function of edge e lives on [lo, entry_end(e))
/// and is zero outside.
struct DynamicFlow {
  std::vector<PiecewiseConstantFn> rates;
};

/// Per-vertex membership in {0, 1} on the horizon [lo, hi). Beyond hi every
/// vertex counts as a member of the source side.
struct DynamicCut {
  std::vector<PiecewiseConstantFn> membership;
};

/// Supremum of the entry times whose flow still arrives by the horizon end;
/// returns lo when no entry time is admissible.
Rational entry_end(const Edge& e, const Rational& lo, const Rational& hi);

DynamicFlow zero_flow(const DynamicNetwork& net);

/// Builder for hand-written flows: rate v on [a, b) of edge e.
class FlowBuilder {
 public:
  explicit FlowBuilder(const DynamicNetwork& net);
  FlowBuilder& add(std::size_t edge, const Rational& a, const Rational& b,
                   const Rational& rate);
  DynamicFlow build() const;

 private:
  std::vector<StepAccumulator> acc_;
};

/// Cut with constant membership per vertex (s forced to 1, t to 0).
DynamicCut constant_cut(const DynamicNetwork& net,
                        const std::vector<std::string>& source_side);

DynamicFlow project_flow(const DynamicNetwork& net, const TimeExpandedGraph& g,
                         const StaticFlow& f);
DynamicCut project_cut(const DynamicNetwork& net, const TimeExpandedGraph& g,
                       const StaticCut& c);

/// Rate at which flow of one edge reaches its head, on [lo, hi).
PiecewiseConstantFn arrival_rate(const PiecewiseConstantFn& rate,
                                 const PiecewiseConstantFn& transit,
                                 const Rational& lo, const Rational& hi);

/// ex_f(v, t): inflow minus outflow of v accumulated over [lo, t].
Rational excess(const DynamicNetwork& net, const DynamicFlow& flow,
                const std::string& vertex, const Rational& t);

/// ex_f(target, hi); throws std::logic_error if it differs from -ex_f(source, hi).
Rational flow_value(const DynamicNetwork& net, const DynamicFlow& flow);

/// Integral of the capacities of edges whose tail is on the source side at
/// entry and whose head is on the sink side at arrival.
Rational cut_capacity(const DynamicNetwork& net, const DynamicCut& cut);

/// Capacity constraints, admissible entry times and strong conservation.
std::vector<Diagnostic> check_feasible(const DynamicNetwork& net,
                                       const DynamicFlow& flow);
/// Membership values in {0,1}, source always in, target never in.
std::vector<Diagnostic> check_cut(const DynamicNetwork& net, const DynamicCut& cut);

/// Edges contributing to the cut must be saturated and edges crossing back
/// must be empty, at every moment.
std::vector<Diagnostic> saturation_violations(const DynamicNetwork& net,
                                              const DynamicFlow& flow,
                                              const DynamicCut& cut);

struct ComplexityCounts {
  std::vector<std::size_t> per_vertex;
  std::vector<std::size_t> per_edge;
  std::size_t cut_total = 0;
  std::size_t flow_total = 0;
};

inline std::size_t count_changes(const PiecewiseConstantFn& fn) {
  return fn.count_changes();
}
ComplexityCounts complexity(const DynamicFlow& flow, const DynamicCut& cut);

}  // namespace dynflow
