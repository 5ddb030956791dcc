#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynflow/dynamic_solution.hpp"

namespace dynflow {

enum class CutExtraction { SourceReachable, SinkCoReachable };

std::string to_string(CutExtraction x);
CutExtraction cut_extraction_from_string(const std::string& s);

struct SolveOptions {
  std::optional<Rational> delta;  // defaults to common_step
  std::int64_t max_nodes = kDefaultMaxNodes;
  std::int64_t padding = 1;       // initial padding multiplier (infinite horizon)
  int max_doublings = 6;
  CutExtraction extraction = CutExtraction::SourceReachable;
};

/// Raised when the infinite-horizon loop does not settle.
class StabilizationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveReport {
  Rational value;
  DynamicFlow flow;
  DynamicCut cut;            // chosen extraction
  DynamicCut alternate_cut;  // the other extraction
  CutExtraction extraction = CutExtraction::SourceReachable;
  ComplexityCounts counts;
  ComplexityCounts alternate_counts;
  Rational cut_capacity;
  Rational duality_gap;
  Rational static_crossing;
  Rational delta;
  Horizon window;  // finite horizon actually solved
  Horizon core;    // counting interval; equals window for finite instances
  std::int64_t padding = 0;
  Rational steady_rate_before = 0;
  Rational steady_rate_after = 0;
  std::int64_t expanded_nodes = 0;
  std::size_t expanded_arcs = 0;
  DynamicNetwork solved;  // the finite network behind flow and cut
  std::vector<Diagnostic> feasibility;
};

/// Complexity counted on [core.lo, core.hi).
ComplexityCounts complexity_on(const DynamicFlow& flow, const DynamicCut& cut,
                               const Horizon& core);

/// Max dynamic flow and min dynamic cut. Throws std::invalid_argument for an
/// invalid network, BudgetExceeded and StabilizationFailed.
SolveReport solve(const DynamicNetwork& net, const SolveOptions& options = {});

/// Steady-state throughput of the static network formed by the first
/// (at_end=false) or last capacity values.
Rational steady_rate(const DynamicNetwork& net, bool at_end);

}  // namespace dynflow
