#include "dynflow/oracle.hpp"

#include <stdexcept>

#include "dynflow/gadgets.hpp"

namespace dynflow {

PartitionAnswer partition_solvable(const PartitionInstance& p) {
  const auto& items = p.items();
  const auto target = static_cast<std::size_t>(p.half());
  // reach[i][s]: some subset of the first i items sums to s
  std::vector<std::vector<char>> reach(items.size() + 1, std::vector<char>(target + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto b = static_cast<std::size_t>(items[i]);
    for (std::size_t s = 0; s <= target; ++s)
      reach[i + 1][s] = reach[i][s] || (s >= b && reach[i][s - b]);
  }
  PartitionAnswer out;
  out.solvable = reach[items.size()][target];
  if (!out.solvable) return out;
  std::size_t s = target;
  for (std::size_t i = items.size(); i > 0; --i) {
    if (reach[i - 1][s]) continue;
    out.witness.insert(out.witness.begin(), i - 1);
    s -= static_cast<std::size_t>(items[i - 1]);
  }
  return out;
}

std::string to_string(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::Capacity: return "cap";
    case ReductionVariant::CapacityInfinite: return "cap-inf";
    case ReductionVariant::TransitFinite: return "transit-finite";
  }
  return "?";
}

ReductionVariant reduction_variant_from_string(const std::string& s) {
  for (auto v : {ReductionVariant::Capacity, ReductionVariant::CapacityInfinite,
                 ReductionVariant::TransitFinite})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown reduction variant '" + s + "'");
}

ReductionCheck verify_reduction(const PartitionInstance& p, ReductionVariant variant,
                                const SolveOptions& options) {
  GadgetBundle g;
  switch (variant) {
    case ReductionVariant::Capacity: g = gen_partition_cap(p); break;
    case ReductionVariant::CapacityInfinite: g = gen_partition_cap_inf(p); break;
    case ReductionVariant::TransitFinite: g = gen_partition_transit(p, HorizonMode::Finite); break;
  }
  const auto report = solve(g.network, options);
  ReductionCheck c;
  c.solvable = partition_solvable(p).solvable;
  c.value = report.value;
  c.threshold = *g.threshold;
  c.meets_threshold = !(c.value < c.threshold);
  c.equivalent = c.meets_threshold == c.solvable;
  c.padding = report.padding;
  return c;
}

Rational tiny_flow_oracle(const DynamicNetwork& net, std::int64_t max_nodes) {
  if (!net.horizon.is_finite()) throw std::invalid_argument("tiny oracle needs a finite horizon");
  const Rational step = common_step(net);
  const std::int64_t steps = (net.horizon.length() / step).to_int64();
  const std::int64_t total = static_cast<std::int64_t>(net.vertices.size()) * steps + 2;
  if (total > max_nodes)
    throw BudgetExceeded("tiny oracle needs " + std::to_string(total) + " nodes");
  const auto n = static_cast<std::size_t>(total);
  const std::size_t src = n - 2, snk = n - 1;
  const auto idx = net.vertex_index();
  auto id = [&](int v, std::int64_t k) { return static_cast<std::size_t>(v * steps + k); };

  std::vector<std::vector<Rational>> res(n, std::vector<Rational>(n, Rational(0)));
  Rational unbounded = 1;
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const auto& e = net.edges[ei];
    const int a = idx.at(e.tail), b = idx.at(e.head);
    for (std::int64_t k = 0; k < steps; ++k) {
      const Rational when = net.horizon.lo + step * Rational(static_cast<long>(k));
      const Rational u = e.capacity.eval(when, 0);
      const std::int64_t arrive = k + (e.transit.eval(when, 0) / step).to_int64();
      if (u.is_zero() || arrive >= steps) continue;
      res[id(a, k)][id(b, arrive)] += u * step;
      unbounded += u * step;
    }
  }
  for (std::int64_t k = 0; k < steps; ++k) {
    res[src][id(idx.at(net.source), k)] = unbounded;
    res[id(idx.at(net.target), k)][snk] = unbounded;
  }

  Rational value = 0;
  while (true) {
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> stack{src};
    parent[src] = src;
    while (!stack.empty() && parent[snk] == n) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = n; w-- > 0;)
        if (parent[w] == n && res[u][w].sign() > 0) {
          parent[w] = u;
          stack.push_back(w);
        }
    }
    if (parent[snk] == n) break;
    Rational push = unbounded;
    for (std::size_t w = snk; w != src; w = parent[w]) push = min(push, res[parent[w]][w]);
    for (std::size_t w = snk; w != src; w = parent[w]) {
      res[parent[w]][w] -= push;
      res[w][parent[w]] += push;
    }
    value += push;
  }
  return value;
}

}  // namespace dynflow
