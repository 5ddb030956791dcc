#pragma once

#include <ostream>

#include "dynflow/gadgets.hpp"
#include "dynflow/instance_io.hpp"
#include "dynflow/solve.hpp"
#include "dynflow/time_expanded.hpp"

namespace dynflow {

/// Functions with their domain: {"lo","hi","breakpoints","values"}.
nlohmann::json fn_to_json(const PiecewiseConstantFn& f);
PiecewiseConstantFn fn_from_json(const nlohmann::json& j);

nlohmann::json flow_to_json(const DynamicNetwork& net, const DynamicFlow& flow);
DynamicFlow flow_from_json(const nlohmann::json& j);
nlohmann::json cut_to_json(const DynamicNetwork& net, const DynamicCut& cut);
DynamicCut cut_from_json(const nlohmann::json& j);
nlohmann::json counts_to_json(const DynamicNetwork& net, const ComplexityCounts& c);

nlohmann::json report_to_json(const SolveReport& r);

/// Parts of a saved report needed to recount complexities.
struct LoadedReport {
  DynamicNetwork network;
  DynamicFlow flow;
  DynamicCut cut;
  Horizon core;
  nlohmann::json stored_counts;
};
LoadedReport report_from_json(const nlohmann::json& j);

/// Sidecar with predictions and references of a generated instance.
nlohmann::json bundle_sidecar(const GadgetBundle& g);

/// CSV rows element_id,kind,lo,hi,value for every piece of flow and cut.
void write_timeline(std::ostream& os, const DynamicNetwork& net, const DynamicFlow& flow,
                    const DynamicCut& cut);

/// Original graph with edges labelled by capacity@interval pieces.
void write_dot(std::ostream& os, const DynamicNetwork& net);
/// Time-expanded graph; node names are vertex@step.
void write_dot(std::ostream& os, const TimeExpandedGraph& g);

}  // namespace dynflow
