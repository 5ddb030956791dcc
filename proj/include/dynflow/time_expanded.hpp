#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dynflow/network.hpp"

namespace dynflow {

/// Raised when an expanded graph would exceed the configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultMaxNodes = 4'000'000;

/// Static unrolling of a finite-horizon network with step delta. Node (v, k)
/// stands for vertex v during [lo + k*delta, lo + (k+1)*delta), k < steps.
/// All copies of the source collapse into one super source and all copies of
/// the target into one super sink; intermediate vertices get no holdover arcs.
struct TimeExpandedGraph {
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  struct Arc {
    int from;
    int to;
    Rational capacity;  // rate * delta
    std::size_t edge;   // originating edge of the dynamic network
    std::int64_t step;  // entry step
    std::int64_t arrival_step;
  };

  Rational lo, hi, delta;
  std::int64_t steps = 0;
  std::vector<std::string> vertex_names;
  int source_vertex = -1;
  int target_vertex = -1;
  std::vector<int> slot;  // vertex -> position among non-terminals, -1 for s/t
  std::vector<int> slot_vertex;
  std::int64_t node_count = 2;
  std::vector<Arc> arcs;

  int node(int vertex, std::int64_t step) const;
  /// Vertex of a node (source/target for the super terminals).
  int vertex_of(int node) const;
  /// Step of a non-terminal node.
  std::int64_t step_of(int node) const;
  Rational step_start(std::int64_t step) const { return lo + delta * Rational(static_cast<long>(step)); }
};

/// Throws std::invalid_argument for an infinite horizon or a step that does
/// not divide every event time and transit, BudgetExceeded past max_nodes.
TimeExpandedGraph expand(const DynamicNetwork& net, const Rational& delta,
                         std::int64_t max_nodes = kDefaultMaxNodes);

struct StaticFlow {
  std::vector<Rational> arc_flow;
  Rational value;
};

struct StaticCut {
  std::vector<char> source_side;  // per node
};

/// Exact maximum flow (Dinic; integer arithmetic after exact scaling when the
/// scaled capacities fit in 64 bits).
StaticFlow max_flow(const TimeExpandedGraph& g);

/// Source side = nodes reachable from the super source in the residual graph.
/// Throws std::logic_error when the sink is reachable (flow not maximum).
StaticCut min_cut(const TimeExpandedGraph& g, const StaticFlow& f);

/// Source side = nodes that cannot reach the super sink in the residual graph.
StaticCut min_cut_sink_side(const TimeExpandedGraph& g, const StaticFlow& f);

/// Total capacity of arcs leaving the source side.
Rational crossing_capacity(const TimeExpandedGraph& g, const StaticCut& c);

/// Independently coded push-relabel value.
Rational max_flow_oracle(const TimeExpandedGraph& g);

/// Static max-flow value of a plain capacitated digraph given as
/// (tail, head, capacity) triples; used for steady-state rates.
Rational static_max_flow_value(int nodes, int source, int sink,
                               const std::vector<std::tuple<int, int, Rational>>& arcs);

}  // namespace dynflow
