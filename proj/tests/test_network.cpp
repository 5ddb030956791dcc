#include <algorithm>

#include "doctest.h"
#include "dynflow/instance_io.hpp"
#include "support.hpp"

using namespace dynflow;
using testsupport::Gen;

namespace {

bool has_message(const std::vector<Diagnostic>& d, const std::string& text) {
  return std::any_of(d.begin(), d.end(),
                     [&](const Diagnostic& x) { return x.message.find(text) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(gen_partition_cap(PartitionInstance({1, 1, 2})).network).empty());

  auto net = testsupport::single_edge(1, 1, 3);
  net.edges[0].capacity = PiecewiseConstantFn::constant(0, 3, -1);
  const auto d = validate(net);
  CHECK(d.size() == 1);
  CHECK(has_message(d, "negative capacity"));

  auto same = testsupport::single_edge(1, 1, 3);
  same.target = "s";
  CHECK(has_message(validate(same), "source equals target"));

  auto loop = testsupport::single_edge(1, 1, 3);
  loop.add_edge("s", "s", 1, 0);
  CHECK(has_message(validate(loop), "self-loop"));

  auto ghost = testsupport::single_edge(1, 1, 3);
  ghost.edges.push_back({"s", "nowhere", ghost.constant_fn(1), ghost.constant_fn(0)});
  CHECK_FALSE(validate(ghost).empty());

  auto bad_horizon = testsupport::single_edge(1, 1, 3);
  bad_horizon.horizon = Horizon::finite(3, 3);
  CHECK_FALSE(validate(bad_horizon).empty());

  auto neg = testsupport::single_edge(1, 1, 3);
  neg.edges[0].transit = PiecewiseConstantFn::constant(0, 3, -1);
  CHECK(has_message(validate(neg), "negative transit"));
}

TEST_CASE("common step") {
  CHECK(common_step(gen_counting_chain(3, ChainVariant::CapFinite).network) == Rational(1, 8));
  auto net = testsupport::single_edge(1, 1, 6);
  CHECK(common_step(net) == 1);
  net.add_vertex("v");
  net.add_edge("s", "v", 1, Rational(1, 2));
  net.add_edge("v", "t", 1, Rational(3, 4));
  CHECK(common_step(net) == Rational(1, 4));
}

TEST_CASE("finite window") {
  const auto g = gen_partition_cap_inf(PartitionInstance({1, 1, 2}));
  const auto w = finite_window(g.network, 1);
  const Rational pad = Rational(static_cast<long>(g.network.vertices.size())) * g.network.max_transit();
  CHECK(w.horizon.is_finite());
  CHECK(w.horizon.lo == g.network.horizon.lo - pad);
  CHECK(w.horizon.hi == g.network.horizon.hi + pad);
  CHECK(validate(w).empty());

  const auto start = gen_counting_chain(1, ChainVariant::CapInfinite);
  const auto w2 = finite_window(start.network, 2);
  CHECK(w2.horizon.lo <= Rational(2) - Rational(2) * padding_unit(start.network));
  CHECK(w2.horizon.hi >= Rational(3) + Rational(2) * padding_unit(start.network));
  CHECK_THROWS(finite_window(start.network, 0));
}

TEST_CASE("property: event times are multiples of the common step") {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto net = testsupport::random_dynamic(g, 5, 7, true);
    const Rational grid = Rational(1, g.integer(1, 4));
    net = scale_network(net, grid, g.rational(3, 2), 1);
    const Rational step = common_step(net);
    for (const auto& e : net.edges) {
      for (const auto& b : e.capacity.breakpoints())
        CHECK(((b - net.horizon.lo) / step).is_integer());
      for (const auto& b : e.transit.breakpoints())
        CHECK(((b - net.horizon.lo) / step).is_integer());
      for (const auto& v : e.transit.values()) CHECK((v / step).is_integer());
    }
    CHECK((net.horizon.length() / step).is_integer());
  }
}

TEST_CASE("property: windows validate and grow with the padding") {
  for (int l = 1; l <= 3; ++l) {
    const auto net = gen_counting_chain(l, ChainVariant::TransitInfinite).network;
    Rational last = 0;
    for (std::int64_t n = 1; n <= 8; n *= 2) {
      const auto w = finite_window(net, n);
      CHECK(validate(w).empty());
      CHECK(last < w.horizon.length());
      last = w.horizon.length();
    }
  }
}

TEST_CASE("partition instance") {
  const PartitionInstance p({1, 1, 2});
  CHECK(p.half() == 2);
  CHECK_THROWS(PartitionInstance({1, 2}));
  CHECK_THROWS(PartitionInstance({0, 2}));
  CHECK_THROWS(PartitionInstance(std::vector<std::int64_t>{}));
  CHECK(PartitionInstance({3, 3, 3, 3}).half() == 6);
}

TEST_CASE("json round trip") {
  for (const auto& net : {gen_partition_transit(PartitionInstance({1, 1, 2}), HorizonMode::Infinite).network,
                          gen_counting_chain(2, ChainVariant::CapFinite).network,
                          gen_random_static(6, 9, 4, 3, 7)}) {
    const auto j = network_to_json(net);
    const auto back = network_from_json(j);
    CHECK(network_to_json(back) == j);
    CHECK(back.edges.size() == net.edges.size());
  }
  const auto j = network_to_json(testsupport::single_edge(1, 1, 3));
  CHECK(j["horizon"]["hi"] == "3/1");
  CHECK(j["edges"][0]["capacity"]["values"][0] == "1/1");
}

TEST_CASE("malformed json is rejected") {
  auto j = network_to_json(testsupport::single_edge(1, 1, 3));
  j["edges"][0]["capacity"]["values"][0] = "1/0";
  CHECK_THROWS_AS(network_from_json(j), FormatError);
  auto k = network_to_json(testsupport::single_edge(1, 1, 3));
  k.erase("source");
  CHECK_THROWS_AS(network_from_json(k), FormatError);
  auto h = network_to_json(testsupport::single_edge(1, 1, 3));
  h["horizon"]["kind"] = "sideways";
  CHECK_THROWS_AS(network_from_json(h), FormatError);
}

TEST_CASE("scaling") {
  const auto net = testsupport::single_edge(2, 1, 3);
  const auto s = scale_network(net, Rational(1, 2), 5, 3);
  CHECK(s.horizon.lo == 5);
  CHECK(s.horizon.hi == Rational(13, 2));
  CHECK(s.edges[0].transit.first_value() == Rational(1, 2));
  CHECK(s.edges[0].capacity.first_value() == 6);
}
