#pragma once

#include <vector>

#include "dynflow/dynamic_solution.hpp"

namespace dynflow {

struct PathFlow {
  std::vector<std::size_t> edges;  // edge indices from s to t
  Rational rate;
  Rational transit;
};

using PathDecomposition = std::vector<PathFlow>;

/// Static flow per edge of minimum total transit among all flows of maximum
/// value that use only paths of transit below horizon_length. Requires a
/// static network.
std::vector<Rational> min_transit_max_flow(const DynamicNetwork& net,
                                           const Rational& horizon_length);

/// Paths covering an s-t flow given per edge. Flow cycles are cancelled and
/// do not appear in the result.
PathDecomposition decompose(const DynamicNetwork& net,
                            const std::vector<Rational>& edge_flow);

/// Per-edge sum of path rates.
std::vector<Rational> recompose(const DynamicNetwork& net, const PathDecomposition& paths);

struct TemporallyRepeatedResult {
  PathDecomposition paths;
  DynamicFlow flow;
  Rational value;
};

/// Each path of transit tau sends its rate from s during [lo, hi - tau).
/// Throws std::invalid_argument for non-static networks or infinite horizons.
TemporallyRepeatedResult temporally_repeated(const DynamicNetwork& net);

}  // namespace dynflow
