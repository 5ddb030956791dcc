#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dynflow/gadgets.hpp"
#include "dynflow/oracle.hpp"
#include "dynflow/report_io.hpp"
#include "dynflow/temporally_repeated.hpp"

using namespace dynflow;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::vector<std::int64_t> parse_items(const std::string& text) {
  std::vector<std::int64_t> items;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      items.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad item '" + tok + "'");
    }
  }
  return items;
}

std::string shown(const Rational& r) {
  return r.is_integer() ? r.num().get_str() : r.str();
}

fs::path sidecar_path(const fs::path& instance) {
  fs::path p = instance;
  p.replace_extension();
  return p.string() + ".predictions.json";
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write " + path.string());
  return os;
}

struct GenerateArgs {
  std::string family;
  std::string items;
  int l = 1;
  int k = 1;
  std::string variant = "cap-finite";
  std::string mode = "finite";
  bool transit = false;
  int n = 4, m = 6;
  std::int64_t max_cap = 5, max_transit = 3;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  GadgetBundle g;
  if (a.family == "partition-cap") {
    g = gen_partition_cap(PartitionInstance(parse_items(a.items)));
  } else if (a.family == "partition-cap-inf") {
    g = gen_partition_cap_inf(PartitionInstance(parse_items(a.items)));
  } else if (a.family == "partition-transit") {
    g = gen_partition_transit(PartitionInstance(parse_items(a.items)),
                              a.mode == "infinite" ? HorizonMode::Infinite : HorizonMode::Finite);
  } else if (a.family == "counting-chain") {
    g = gen_counting_chain(a.l, chain_variant_from_string(a.variant));
  } else if (a.family == "expflow-simplecut") {
    g = gen_expflow_simplecut(a.k, a.transit);
  } else if (a.family == "expcut-simpleflow") {
    g = gen_expcut_simpleflow(a.k, a.transit);
  } else if (a.family == "random-static") {
    g.network = gen_random_static(a.n, a.m, a.max_cap, a.max_transit, a.seed);
    g.provenance = "random static, seed " + std::to_string(a.seed);
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }
  save_json(a.out, network_to_json(g.network));
  save_json(sidecar_path(a.out), bundle_sidecar(g));
  std::cout << "wrote " << a.out << " and " << sidecar_path(a.out).string() << "\n";
  return kOk;
}

struct SolveArgs {
  std::string instance;
  std::string delta;
  std::int64_t max_nodes = kDefaultMaxNodes;
  std::int64_t padding = 1;
  int max_doublings = 6;
  std::string extraction = "source-reachable";
  std::string report;
  std::string timeline;
};

SolveOptions options_of(const SolveArgs& a) {
  SolveOptions o;
  if (!a.delta.empty()) o.delta = Rational::parse(a.delta);
  o.max_nodes = a.max_nodes;
  o.padding = a.padding;
  o.max_doublings = a.max_doublings;
  o.extraction = cut_extraction_from_string(a.extraction);
  return o;
}

int run_solve(const SolveArgs& a) {
  const auto net = load_network(a.instance);
  const auto r = solve(net, options_of(a));
  std::cout << "value " << shown(r.value) << "\ncut capacity " << shown(r.cut_capacity)
            << "\nduality gap " << shown(r.duality_gap) << "\ndelta " << shown(r.delta)
            << "\nwindow [" << shown(r.window.lo) << ", " << shown(r.window.hi) << ")"
            << "\npadding " << r.padding << "\nexpanded nodes " << r.expanded_nodes
            << "\ncut complexity " << r.counts.cut_total << "\nflow complexity "
            << r.counts.flow_total << "\n";
  for (const auto& d : r.feasibility) std::cout << "infeasible: " << d.where << ": " << d.message << "\n";
  if (!a.report.empty()) save_json(a.report, report_to_json(r));
  if (!a.timeline.empty()) {
    auto os = open_out(a.timeline);
    write_timeline(os, r.solved, r.flow, r.cut);
  }
  return r.duality_gap.is_zero() && r.feasibility.empty() ? kOk : kVerifyFailed;
}

int run_verify_partition(const std::string& items, const std::string& variant) {
  const PartitionInstance p(parse_items(items));
  const auto c = verify_reduction(p, reduction_variant_from_string(variant));
  std::cout << (c.solvable ? "solvable" : "unsolvable") << " / value "
            << (c.meets_threshold ? ">= " : "< ") << shown(c.threshold) << " / "
            << (c.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
  std::cout << "value " << shown(c.value) << "\n";
  return c.equivalent ? kOk : kVerifyFailed;
}

int run_verify_patterns(int l, const std::string& variant) {
  const auto g = gen_counting_chain(l, chain_variant_from_string(variant));
  const auto r = solve(g.network);
  int bad = 0;
  for (const auto& pa : g.expected_patterns) {
    const auto& m = r.cut.membership[static_cast<std::size_t>(r.solved.index_of(pa.vertex))];
    const bool ok = m.restricted(pa.membership.domain_lo(), pa.membership.domain_hi()) == pa.membership;
    if (!ok) ++bad;
    std::cout << (ok ? "ok   " : "FAIL ") << pa.vertex << " on [" << shown(pa.membership.domain_lo())
              << ", " << shown(pa.membership.domain_hi()) << ")\n";
  }
  return bad == 0 ? kOk : kVerifyFailed;
}

int run_verify_duality(const SolveArgs& a) {
  const auto net = load_network(a.instance);
  const auto r = solve(net, options_of(a));
  bool ok = r.duality_gap.is_zero() && r.feasibility.empty() && r.static_crossing == r.value;
  std::cout << "value " << shown(r.value) << ", cut capacity " << shown(r.cut_capacity)
            << ", static crossing " << shown(r.static_crossing) << "\n";
  if (net.horizon.is_finite()) {
    const auto oracle = max_flow_oracle(expand(net, r.delta, a.max_nodes));
    std::cout << "push-relabel " << shown(oracle) << "\n";
    ok = ok && oracle == r.value;
  }
  std::cout << (ok ? "DUALITY OK" : "DUALITY FAILED") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int run_static_cross_check(int count, std::uint64_t seed, int n, int m) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const auto net = gen_random_static(n, m, 5, 3, seed + static_cast<std::uint64_t>(i));
    const auto r = solve(net);
    const auto tr = temporally_repeated(net);
    const auto pr = max_flow_oracle(expand(net, r.delta));
    std::optional<Rational> tiny;
    try {
      tiny = tiny_flow_oracle(net);
    } catch (const BudgetExceeded&) {
    }
    const bool ok = tr.value == r.value && pr == r.value && (!tiny || *tiny == r.value);
    if (!ok) {
      ++failures;
      std::cout << "seed " << seed + static_cast<std::uint64_t>(i) << ": solve " << shown(r.value)
                << " repeated " << shown(tr.value) << " push-relabel " << shown(pr) << "\n";
    }
  }
  std::cout << count - failures << "/" << count << " instances agree\n";
  return failures == 0 ? kOk : kVerifyFailed;
}

int run_export_dot(const std::string& instance, bool expanded, const std::string& delta,
                   const std::string& out) {
  const auto net = load_network(instance);
  std::ostringstream os;
  if (expanded) {
    const auto finite = net.horizon.is_finite() ? net : finite_window(net, 1);
    write_dot(os, expand(finite, delta.empty() ? common_step(finite) : Rational::parse(delta)));
  } else {
    write_dot(os, net);
  }
  if (out.empty()) {
    std::cout << os.str();
  } else {
    auto f = open_out(out);
    f << os.str();
  }
  return kOk;
}

int run_complexity(const std::string& report_path) {
  const auto rep = report_from_json(load_json(report_path));
  const auto counts = complexity_on(rep.flow, rep.cut, rep.core);
  const auto fresh = counts_to_json(rep.network, counts);
  std::cout << "cut complexity " << counts.cut_total << "\nflow complexity " << counts.flow_total
            << "\n";
  const bool ok = fresh == rep.stored_counts;
  std::cout << (ok ? "matches report" : "DIFFERS from report") << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum dynamic flows and minimum dynamic cuts"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a generated instance and its predictions");
  g->add_option("family", gen.family,
                "partition-cap | partition-cap-inf | partition-transit | counting-chain | "
                "expflow-simplecut | expcut-simpleflow | random-static")
      ->required();
  g->add_option("--items", gen.items, "partition items, comma separated");
  g->add_option("--l", gen.l, "counting chain length");
  g->add_option("--k", gen.k, "size parameter");
  g->add_option("--variant", gen.variant, "cap-finite | cap-infinite | transit-finite | transit-infinite");
  g->add_option("--mode", gen.mode, "finite | infinite");
  g->add_flag("--transit-variant", gen.transit, "use a transit change instead of a capacity change");
  g->add_option("--n", gen.n, "vertices");
  g->add_option("--m", gen.m, "edges");
  g->add_option("--max-cap", gen.max_cap);
  g->add_option("--max-transit", gen.max_transit);
  g->add_option("--seed", gen.seed);
  g->add_option("-o,--output", gen.out, "instance path")->required();

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "solve an instance");
  s->add_option("instance", sol.instance)->required();
  s->add_option("--delta", sol.delta, "time step override, e.g. 1/8");
  s->add_option("--max-nodes", sol.max_nodes, "expanded node budget");
  s->add_option("--padding", sol.padding, "initial padding multiplier for infinite time");
  s->add_option("--max-doublings", sol.max_doublings, "padding doublings before giving up");
  s->add_option("--extraction", sol.extraction, "source-reachable | sink-co-reachable");
  s->add_option("--report", sol.report, "report JSON path");
  s->add_option("--timeline", sol.timeline, "timeline CSV path");

  auto* v = app.add_subcommand("verify", "run a verification");
  v->require_subcommand(1);
  std::string items, pvariant = "cap";
  auto* vp = v->add_subcommand("partition", "reduction outcome against subset sum");
  vp->add_option("--items", items)->required();
  vp->add_option("--variant", pvariant, "cap | cap-inf | transit-finite");
  int pl = 3;
  std::string cvariant = "cap-finite";
  auto* vg = v->add_subcommand("gadget-patterns", "counting chain cut patterns");
  vg->add_option("--l", pl);
  vg->add_option("--variant", cvariant);
  SolveArgs dua;
  auto* vd = v->add_subcommand("duality", "flow value, cut capacity and oracle agreement");
  vd->add_option("instance", dua.instance)->required();
  vd->add_option("--max-nodes", dua.max_nodes);
  int count = 20, rn = 6, rm = 10;
  std::uint64_t seed = 1;
  auto* vs = v->add_subcommand("static-cross-check", "solvers agree on random static networks");
  vs->add_option("--count", count);
  vs->add_option("--seed", seed);
  vs->add_option("--n", rn);
  vs->add_option("--m", rm);

  std::string dot_instance, dot_delta, dot_out;
  bool dot_expanded = false;
  auto* d = app.add_subcommand("export-dot", "Graphviz export");
  d->add_option("instance", dot_instance)->required();
  d->add_flag("--expanded", dot_expanded, "export the time-expanded graph");
  d->add_option("--delta", dot_delta);
  d->add_option("-o,--output", dot_out);

  std::string report_path;
  auto* c = app.add_subcommand("complexity", "recount complexities of a saved report");
  c->add_option("report", report_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return run_generate(gen);
    if (*s) return run_solve(sol);
    if (*vp) return run_verify_partition(items, pvariant);
    if (*vg) return run_verify_patterns(pl, cvariant);
    if (*vd) return run_verify_duality(dua);
    if (*vs) return run_static_cross_check(count, seed, rn, rm);
    if (*d) return run_export_dot(dot_instance, dot_expanded, dot_delta, dot_out);
    if (*c) return run_complexity(report_path);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
