#include "dynflow/report_io.hpp"

namespace dynflow {

using nlohmann::json;

json fn_to_json(const PiecewiseConstantFn& f) {
  json j = step_fn_to_json(f);
  j["lo"] = rational_to_json(f.domain_lo());
  j["hi"] = rational_to_json(f.domain_hi());
  return j;
}

PiecewiseConstantFn fn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    throw FormatError("function needs lo and hi");
  return step_fn_from_json(j, rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

json flow_to_json(const DynamicNetwork& net, const DynamicFlow& flow) {
  json out = json::array();
  for (std::size_t e = 0; e < flow.rates.size(); ++e) {
    json row = fn_to_json(flow.rates[e]);
    row["edge"] = e;
    row["label"] = net.edge_label(e);
    out.push_back(std::move(row));
  }
  return out;
}

DynamicFlow flow_from_json(const json& j) {
  DynamicFlow f;
  for (const auto& row : j) f.rates.push_back(fn_from_json(row));
  return f;
}

json cut_to_json(const DynamicNetwork& net, const DynamicCut& cut) {
  json out = json::array();
  for (std::size_t v = 0; v < cut.membership.size(); ++v) {
    json row = fn_to_json(cut.membership[v]);
    row["vertex"] = net.vertices[v];
    out.push_back(std::move(row));
  }
  return out;
}

DynamicCut cut_from_json(const json& j) {
  DynamicCut c;
  for (const auto& row : j) c.membership.push_back(fn_from_json(row));
  return c;
}

json counts_to_json(const DynamicNetwork& net, const ComplexityCounts& c) {
  json per_vertex = json::object();
  for (std::size_t v = 0; v < c.per_vertex.size(); ++v) per_vertex[net.vertices[v]] = c.per_vertex[v];
  return {{"cut_total", c.cut_total},
          {"flow_total", c.flow_total},
          {"per_vertex", per_vertex},
          {"per_edge", c.per_edge}};
}

namespace {

json interval(const Horizon& h) {
  return {{"lo", rational_to_json(h.lo)}, {"hi", rational_to_json(h.hi)}};
}

}  // namespace

json report_to_json(const SolveReport& r) {
  json diags = json::array();
  for (const auto& d : r.feasibility) diags.push_back({{"where", d.where}, {"message", d.message}});
  return {{"value", rational_to_json(r.value)},
          {"cut_capacity", rational_to_json(r.cut_capacity)},
          {"duality_gap", rational_to_json(r.duality_gap)},
          {"static_crossing", rational_to_json(r.static_crossing)},
          {"delta", rational_to_json(r.delta)},
          {"window", interval(r.window)},
          {"core", interval(r.core)},
          {"padding", r.padding},
          {"steady_rate_before", rational_to_json(r.steady_rate_before)},
          {"steady_rate_after", rational_to_json(r.steady_rate_after)},
          {"expanded_nodes", r.expanded_nodes},
          {"expanded_arcs", r.expanded_arcs},
          {"extraction", to_string(r.extraction)},
          {"feasibility", diags},
          {"network", network_to_json(r.solved)},
          {"flow", flow_to_json(r.solved, r.flow)},
          {"cut", cut_to_json(r.solved, r.cut)},
          {"alternate_cut", cut_to_json(r.solved, r.alternate_cut)},
          {"complexity", counts_to_json(r.solved, r.counts)},
          {"alternate_complexity", counts_to_json(r.solved, r.alternate_counts)}};
}

LoadedReport report_from_json(const json& j) {
  try {
    LoadedReport r;
    r.network = network_from_json(j.at("network"));
    r.flow = flow_from_json(j.at("flow"));
    r.cut = cut_from_json(j.at("cut"));
    r.core = Horizon::finite(rational_from_json(j.at("core").at("lo")),
                             rational_from_json(j.at("core").at("hi")));
    r.stored_counts = j.at("complexity");
    if (r.flow.rates.size() != r.network.edges.size() ||
        r.cut.membership.size() != r.network.vertices.size())
      throw FormatError("report sizes do not match its network");
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

json bundle_sidecar(const GadgetBundle& g) {
  json patterns = json::array();
  for (const auto& p : g.expected_patterns) {
    json row = fn_to_json(p.membership);
    row["vertex"] = p.vertex;
    patterns.push_back(std::move(row));
  }
  json j = {{"provenance", g.provenance},
            {"predicted_value", g.predicted_value ? rational_to_json(*g.predicted_value) : json()},
            {"threshold", g.threshold ? rational_to_json(*g.threshold) : json()},
            {"reference_cut_is_minimum", g.reference_cut_is_minimum},
            {"expected_patterns", patterns}};
  j["reference_flow"] = g.reference_flow ? flow_to_json(g.network, *g.reference_flow) : json();
  j["reference_cut"] = g.reference_cut ? cut_to_json(g.network, *g.reference_cut) : json();
  return j;
}

void write_timeline(std::ostream& os, const DynamicNetwork& net, const DynamicFlow& flow,
                    const DynamicCut& cut) {
  os << "element_id,kind,lo,hi,value\n";
  for (std::size_t e = 0; e < flow.rates.size(); ++e)
    for (const auto& p : flow.rates[e].pieces())
      os << net.edge_label(e) << ",flow," << p.lo.str() << ',' << p.hi.str() << ','
         << p.value.str() << '\n';
  for (std::size_t v = 0; v < cut.membership.size(); ++v)
    for (const auto& p : cut.membership[v].pieces())
      os << net.vertices[v] << ",cut," << p.lo.str() << ',' << p.hi.str() << ','
         << p.value.str() << '\n';
}

namespace {

std::string pieces_label(const PiecewiseConstantFn& f) {
  std::string s;
  for (const auto& p : f.pieces()) {
    if (!s.empty()) s += ", ";
    s += p.value.str() + "@[" + p.lo.str() + "," + p.hi.str() + ")";
  }
  return s;
}

}  // namespace

void write_dot(std::ostream& os, const DynamicNetwork& net) {
  os << "digraph dynamic {\n  rankdir=LR;\n";
  for (const auto& v : net.vertices) os << "  \"" << v << "\";\n";
  for (const auto& e : net.edges)
    os << "  \"" << e.tail << "\" -> \"" << e.head << "\" [label=\"u: "
       << pieces_label(e.capacity) << "\\ntau: " << pieces_label(e.transit) << "\"];\n";
  os << "}\n";
}

void write_dot(std::ostream& os, const TimeExpandedGraph& g) {
  auto name = [&](int node) {
    if (node == TimeExpandedGraph::kSource) return g.vertex_names[g.source_vertex] + "@*";
    if (node == TimeExpandedGraph::kSink) return g.vertex_names[g.target_vertex] + "@*";
    return g.vertex_names[static_cast<std::size_t>(g.vertex_of(node))] + "@" +
           std::to_string(g.step_of(node));
  };
  os << "digraph expanded {\n  rankdir=LR;\n";
  for (const auto& a : g.arcs) {
    const Rational start = g.step_start(a.step);
    os << "  \"" << name(a.from) << "\" -> \"" << name(a.to) << "\" [label=\""
       << a.capacity.str() << "@[" << start.str() << "," << (start + g.delta).str() << ")\"];\n";
  }
  os << "}\n";
}

}  // namespace dynflow
