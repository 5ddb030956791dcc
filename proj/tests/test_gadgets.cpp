#include <algorithm>
#include <set>

#include "doctest.h"
#include "dynflow/instance_io.hpp"
#include "dynflow/oracle.hpp"
#include "support.hpp"

using namespace dynflow;

namespace {

std::vector<GadgetBundle> all_bundles() {
  std::vector<GadgetBundle> out;
  for (auto items : {std::vector<std::int64_t>{1, 1, 2}, {1, 1, 4}, {2, 2}}) {
    const PartitionInstance p(items);
    out.push_back(gen_partition_cap(p));
    out.push_back(gen_partition_cap_inf(p));
    out.push_back(gen_partition_transit(p, HorizonMode::Finite));
    out.push_back(gen_partition_transit(p, HorizonMode::Infinite));
  }
  for (int l = 1; l <= 3; ++l)
    for (auto v : {ChainVariant::CapFinite, ChainVariant::CapInfinite, ChainVariant::TransitFinite,
                   ChainVariant::TransitInfinite})
      out.push_back(gen_counting_chain(l, v));
  for (int k = 1; k <= 3; ++k)
    for (bool tv : {false, true}) {
      out.push_back(gen_expflow_simplecut(k, tv));
      out.push_back(gen_expcut_simpleflow(k, tv));
    }
  return out;
}

bool patterns_hold(const GadgetBundle& g, const DynamicCut& cut) {
  for (const auto& pa : g.expected_patterns) {
    const auto& m = cut.membership[static_cast<std::size_t>(g.network.index_of(pa.vertex))];
    if (!(m.restricted(pa.membership.domain_lo(), pa.membership.domain_hi()) == pa.membership))
      return false;
  }
  return true;
}

bool acyclic(const DynamicNetwork& net) {
  std::vector<int> indeg(net.vertices.size(), 0);
  for (const auto& e : net.edges) ++indeg[static_cast<std::size_t>(net.index_of(e.head))];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < indeg.size(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    const auto v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& e : net.edges)
      if (e.tail == net.vertices[v] && --indeg[static_cast<std::size_t>(net.index_of(e.head))] == 0)
        queue.push_back(static_cast<std::size_t>(net.index_of(e.head)));
  }
  return seen == net.vertices.size();
}

}  // namespace

TEST_CASE("every generated bundle validates") {
  for (const auto& g : all_bundles()) {
    CAPTURE(g.provenance);
    CHECK(validate(g.network).empty());
    CHECK_FALSE(g.provenance.empty());
    if (g.reference_flow) CHECK(check_feasible(g.network, *g.reference_flow).empty());
  }
}

TEST_CASE("partition reduction with capacities") {
  const auto yes = gen_partition_cap(PartitionInstance({1, 1, 2}));
  CHECK(*yes.threshold == 1);
  CHECK(yes.network.horizon.hi == 5);
  CHECK(solve(yes.network).value == 1);
  CHECK(solve(gen_partition_cap(PartitionInstance({2, 2})).network).value == 1);
  CHECK(solve(gen_partition_cap(PartitionInstance({1, 1, 4})).network).value == Rational(3, 4));
}

TEST_CASE("partition reduction with transits") {
  const auto g = gen_partition_transit(PartitionInstance({1, 1, 4}), HorizonMode::Finite);
  CHECK(*g.threshold == 8);
  CHECK(solve(g.network).value == Rational(55, 7));
  CHECK(solve(gen_partition_transit(PartitionInstance({2, 2}), HorizonMode::Finite).network).value == 6);
}

TEST_CASE("bypass transit sets") {
  for (std::int64_t half = 1; half <= 9; ++half) {
    const auto plain = bypass_transits(half, false);
    std::vector<std::int64_t> want(static_cast<std::size_t>(half));
    for (std::int64_t i = 0; i < half; ++i) want[static_cast<std::size_t>(i)] = i;
    CHECK(std::set<std::int64_t>(plain.begin(), plain.end()) == std::set<std::int64_t>(want.begin(), want.end()));
    const auto ext = bypass_transits(half, true);
    std::set<std::int64_t> e(ext.begin(), ext.end());
    CHECK(e.size() == static_cast<std::size_t>(2 * half));
    CHECK_FALSE(e.count(half));
    CHECK(*e.rbegin() == 2 * half);
  }
}

TEST_CASE("mimicking preconditions") {
  auto base = testsupport::single_edge(1, 0, 4);
  base.add_vertex("a");
  base.add_vertex("b");
  base.add_edge("s", "a", 1, 0);
  base.add_edge("b", "t", 2, 0);
  {
    auto net = base;
    CHECK_THROWS_AS(gen_mimicking(net, "a", "b", 3, 1, 0, 0), std::invalid_argument);
  }
  {
    auto net = base;
    const auto m = gen_mimicking(net, "a", "b", Rational(7, 2), Rational(1, 2), 1, 0);
    CHECK(net.edges[m.ab].tail == "a");
    CHECK(net.edges[m.bt].head == "t");
    CHECK(validate(net).empty());
  }
  {
    auto net = base;
    net.add_edge("s", "b", 1, 0);
    CHECK_THROWS_AS(gen_mimicking(net, "a", "b", 10, 1, 0, 0), std::invalid_argument);
  }
}

TEST_CASE("counting chain patterns") {
  for (int l : {1, 3})
    for (auto v : {ChainVariant::CapFinite, ChainVariant::CapInfinite, ChainVariant::TransitFinite,
                   ChainVariant::TransitInfinite}) {
      CAPTURE(l);
      CAPTURE(to_string(v));
      const auto g = gen_counting_chain(l, v);
      const auto r = solve(g.network);
      CHECK(r.duality_gap == 0);
      CHECK(patterns_hold(g, r.cut));
      CHECK(patterns_hold(g, r.alternate_cut));
    }
  CHECK(chain_variant_from_string("transit-infinite") == ChainVariant::TransitInfinite);
  CHECK_THROWS_AS(chain_variant_from_string("x"), std::invalid_argument);
}

TEST_CASE("complex flow with a simple cut") {
  for (int k = 1; k <= 4; ++k) {
    const auto g = gen_expflow_simplecut(k);
    const auto r = solve(g.network);
    CHECK(r.value == 1);
    CHECK(cut_capacity(g.network, *g.reference_cut) == 1);
    std::size_t changes = 0;
    for (auto c : complexity(r.flow, *g.reference_cut).per_edge) changes += c;
    CHECK(changes >= (std::size_t{1} << k));
  }
}

TEST_CASE("complex cut with a simple flow") {
  for (int k = 1; k <= 4; ++k) {
    const auto g = gen_expcut_simpleflow(k);
    const Rational want = Rational::pow2(k) / (Rational::pow2(k) + 1);
    CHECK(*g.predicted_value == want);
    CHECK(flow_value(g.network, *g.reference_flow) == want);
    for (const auto& rate : g.reference_flow->rates) CHECK(rate.count_changes() <= 1);
    const auto r = solve(g.network);
    CHECK(r.value == want);
    const auto xk = static_cast<std::size_t>(g.network.index_of("x" + std::to_string(k)));
    CHECK(r.cut.membership[xk].count_changes() == (std::size_t{1} << k));
    CHECK(r.alternate_cut.membership[xk].count_changes() == (std::size_t{1} << k));
  }
}

TEST_CASE("random static generator") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = gen_random_static(6, 10, 5, 3, seed);
    const auto b = gen_random_static(6, 10, 5, 3, seed);
    CHECK(network_to_json(a).dump() == network_to_json(b).dump());
    CHECK(validate(a).empty());
    CHECK(acyclic(a));
    CHECK(a.is_static());
  }
  CHECK(network_to_json(gen_random_static(6, 10, 5, 3, 1)).dump() !=
        network_to_json(gen_random_static(6, 10, 5, 3, 2)).dump());
}
