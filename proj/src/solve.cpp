#include "dynflow/solve.hpp"

#include <sstream>

namespace dynflow {

std::string to_string(CutExtraction x) {
  return x == CutExtraction::SourceReachable ? "source-reachable" : "sink-co-reachable";
}

CutExtraction cut_extraction_from_string(const std::string& s) {
  if (s == "source-reachable") return CutExtraction::SourceReachable;
  if (s == "sink-co-reachable") return CutExtraction::SinkCoReachable;
  throw std::invalid_argument("unknown cut extraction '" + s + "'");
}

ComplexityCounts complexity_on(const DynamicFlow& flow, const DynamicCut& cut,
                               const Horizon& core) {
  ComplexityCounts c;
  for (const auto& m : cut.membership) {
    c.per_vertex.push_back(m.count_changes(core.lo, core.hi));
    c.cut_total += c.per_vertex.back();
  }
  for (const auto& f : flow.rates) {
    c.per_edge.push_back(f.count_changes(core.lo, core.hi));
    c.flow_total += c.per_edge.back();
  }
  return c;
}

Rational steady_rate(const DynamicNetwork& net, bool at_end) {
  const auto idx = net.vertex_index();
  std::vector<std::tuple<int, int, Rational>> arcs;
  for (const auto& e : net.edges)
    arcs.emplace_back(idx.at(e.tail), idx.at(e.head),
                      at_end ? e.capacity.last_value() : e.capacity.first_value());
  return static_max_flow_value(static_cast<int>(net.vertices.size()), idx.at(net.source),
                               idx.at(net.target), arcs);
}

namespace {

void require_valid(const DynamicNetwork& net) {
  const auto diags = validate(net);
  if (diags.empty()) return;
  std::ostringstream os;
  os << "invalid network:";
  for (const auto& d : diags) os << " [" << d.where << ": " << d.message << "]";
  throw std::invalid_argument(os.str());
}

SolveReport solve_finite(const DynamicNetwork& net, const SolveOptions& opt) {
  SolveReport r;
  r.delta = opt.delta ? *opt.delta : common_step(net);
  const auto g = expand(net, r.delta, opt.max_nodes);
  const auto f = max_flow(g);
  const auto source_cut = min_cut(g, f);
  const auto sink_cut = min_cut_sink_side(g, f);
  const bool src = opt.extraction == CutExtraction::SourceReachable;
  const auto& chosen = src ? source_cut : sink_cut;

  r.extraction = opt.extraction;
  r.flow = project_flow(net, g, f);
  r.cut = project_cut(net, g, chosen);
  r.alternate_cut = project_cut(net, g, src ? sink_cut : source_cut);
  r.value = flow_value(net, r.flow);
  r.cut_capacity = cut_capacity(net, r.cut);
  r.duality_gap = r.cut_capacity - r.value;
  r.static_crossing = crossing_capacity(g, chosen);
  r.window = net.horizon;
  r.core = net.horizon;
  r.expanded_nodes = g.node_count;
  r.expanded_arcs = g.arcs.size();
  r.feasibility = check_feasible(net, r.flow);
  for (auto& d : check_cut(net, r.cut)) r.feasibility.push_back(d);
  r.counts = complexity_on(r.flow, r.cut, r.core);
  r.alternate_counts = complexity_on(r.flow, r.alternate_cut, r.core);
  r.solved = net;
  return r;
}

std::vector<PiecewiseConstantFn> core_membership(const SolveReport& r, const Horizon& core) {
  std::vector<PiecewiseConstantFn> out;
  for (const auto& m : r.cut.membership) out.push_back(m.restricted(core.lo, core.hi));
  return out;
}

}  // namespace

SolveReport solve(const DynamicNetwork& net, const SolveOptions& options) {
  require_valid(net);
  if (net.horizon.is_finite()) return solve_finite(net, options);
  if (options.padding < 1) throw std::invalid_argument("padding must be positive");

  const Rational before = steady_rate(net, false);
  const Rational after = steady_rate(net, true);
  const Rational unit = padding_unit(net);
  std::int64_t n = options.padding;
  SolveReport prev = solve_finite(finite_window(net, n), options);
  for (int round = 0; round < options.max_doublings; ++round) {
    SolveReport next = solve_finite(finite_window(net, 2 * n), options);
    const Rational growth = (before + after) * unit * Rational(static_cast<long>(n));
    if (next.value - prev.value == growth && core_membership(prev, net.horizon) == core_membership(next, net.horizon)) {
      prev.core = net.horizon;
      prev.padding = n;
      prev.steady_rate_before = before;
      prev.steady_rate_after = after;
      prev.counts = complexity_on(prev.flow, prev.cut, prev.core);
      prev.alternate_counts = complexity_on(prev.flow, prev.alternate_cut, prev.core);
      return prev;
    }
    prev = std::move(next);
    n *= 2;
  }
  throw StabilizationFailed("no stable solution up to padding " + std::to_string(n));
}

}  // namespace dynflow
