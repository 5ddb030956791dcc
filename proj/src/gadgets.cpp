#include "dynflow/gadgets.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "dynflow/oracle.hpp"

namespace dynflow {

namespace {

const Rational kEps(1, 6);

std::string x_name(std::size_t i) { return "x" + std::to_string(i); }
std::string y_name(std::size_t i) { return "y" + std::to_string(i); }
Rational R(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Denominations of the bypass pairs: powers of two while they fit, then the
// remainder, so that every integer in [0, top] is a subset sum.
std::vector<std::int64_t> binary_denominations(std::int64_t top) {
  std::vector<std::int64_t> out;
  std::int64_t rest = top;
  for (std::int64_t p = 1; p <= rest; p *= 2) {
    out.push_back(p);
    rest -= p;
  }
  if (rest > 0) out.push_back(rest);
  return out;
}

std::set<std::int64_t> subset_sums(const std::vector<std::int64_t>& items) {
  std::set<std::int64_t> sums{0};
  for (auto b : items) {
    std::set<std::int64_t> next = sums;
    for (auto s : sums) next.insert(s + b);
    sums = std::move(next);
  }
  return sums;
}

// x-chain with one pair per item, then the y bypass from x_0 to x_k.
void add_partition_core(DynamicNetwork& net, const PartitionInstance& p,
                        const std::vector<std::int64_t>& denominations) {
  const std::size_t k = p.size();
  for (std::size_t i = 0; i <= k; ++i) net.add_vertex(x_name(i));
  for (std::size_t i = 0; i <= denominations.size(); ++i) net.add_vertex(y_name(i));
  for (std::size_t i = 0; i < k; ++i) {
    net.add_edge(x_name(i), x_name(i + 1), 1, R(p.items()[i]));
    net.add_edge(x_name(i), x_name(i + 1), 1, 0);
  }
  net.add_edge(x_name(0), y_name(0), 1, 0);
  for (std::size_t i = 0; i < denominations.size(); ++i) {
    net.add_edge(y_name(i), y_name(i + 1), 1, R(denominations[i]));
    net.add_edge(y_name(i), y_name(i + 1), 1, 0);
  }
  net.add_edge(y_name(denominations.size()), x_name(k), 1, 0);
}

DynamicNetwork terminals(const Horizon& h) {
  DynamicNetwork net;
  net.source = "s";
  net.target = "t";
  net.horizon = h;
  net.add_vertex("s");
  net.add_vertex("t");
  return net;
}

GadgetBundle partition_cap(const PartitionInstance& p, bool infinite) {
  const std::int64_t L = p.half();
  const Rational T = R(L + 3);
  GadgetBundle g;
  g.network = terminals(infinite ? Horizon::infinite(0, T) : Horizon::finite(0, T));
  auto& net = g.network;
  net.add_edge("s", x_name(0), Rational(1, L + 1), 1);
  add_partition_core(net, p, binary_denominations(L - 1));
  const auto cap = infinite ? net.step_fn({0, R(L + 1), R(L + 2)}, {0, 1, 0})
                            : net.step_fn({0, R(L + 1)}, {0, 1});
  net.add_edge(x_name(p.size()), "t", cap, net.constant_fn(1));
  g.threshold = Rational(1);
  if (partition_solvable(p).solvable) g.predicted_value = Rational(1);
  g.provenance = infinite ? "partition reduction, two capacity changes, infinite time"
                          : "partition reduction, one capacity change, horizon L+3";
  return g;
}

}  // namespace

GadgetBundle gen_partition_cap(const PartitionInstance& p) { return partition_cap(p, false); }
GadgetBundle gen_partition_cap_inf(const PartitionInstance& p) { return partition_cap(p, true); }

std::vector<std::int64_t> bypass_transits(std::int64_t half, bool extended) {
  auto items = binary_denominations(half - 1);
  if (extended) items.push_back(half + 1);
  const auto sums = subset_sums(items);
  return {sums.begin(), sums.end()};
}

GadgetBundle gen_partition_transit(const PartitionInstance& p, HorizonMode mode) {
  const std::int64_t L = p.half();
  GadgetBundle g;
  const bool finite = mode == HorizonMode::Finite;
  g.network = terminals(finite ? Horizon::finite(0, R(2 * L + 2))
                               : Horizon::infinite(-1, R(2 * L + 1)));
  auto& net = g.network;

  auto denominations = binary_denominations(L - 1);
  denominations.push_back(L + 1);
  std::vector<std::int64_t> expected;
  for (std::int64_t d = 0; d <= 2 * L; ++d)
    if (d != L) expected.push_back(d);
  if (bypass_transits(L, true) != expected)
    throw std::logic_error("bypass does not realize {0..2L} without L");

  const Rational change = finite ? Rational(1) : Rational(0);
  net.add_edge("s", x_name(0), net.constant_fn(1),
               net.step_fn({net.horizon.lo, change}, {1, 0}));
  net.add_edge(x_name(0), "t", 1, 0);
  add_partition_core(net, p, denominations);
  net.add_edge(x_name(p.size()), "t", Rational(1, 2 * L + 1), 0);
  if (finite) {
    g.threshold = R(2 * L + 2);
    if (partition_solvable(p).solvable) g.predicted_value = g.threshold;
  }
  g.provenance = finite ? "partition reduction, one transit change, horizon 2L+2"
                        : "partition reduction, one transit change, infinite time";
  return g;
}

MimicEdges gen_mimicking(DynamicNetwork& net, const std::string& a, const std::string& b,
                         const Rational& alpha, const Rational& beta,
                         const Rational& tau_ab, const Rational& tau_bt) {
  Rational out = beta, in = 0;
  for (const auto& e : net.edges) {
    if (e.tail == b) out += e.capacity.max_value();
    if (e.head == b && e.tail != a) in += e.capacity.max_value();
  }
  if (!(out < alpha))
    throw std::invalid_argument("mimicking " + a + "->" + b + ": alpha " + alpha.str() +
                                " must exceed out-capacity " + out.str());
  if (!(in < beta))
    throw std::invalid_argument("mimicking " + a + "->" + b + ": beta " + beta.str() +
                                " must exceed in-capacity " + in.str());
  const auto ab = net.add_edge(a, b, alpha, tau_ab);
  const auto bt = net.add_edge(b, net.target, beta, tau_bt);
  return {ab, bt};
}

std::string to_string(ChainVariant v) {
  switch (v) {
    case ChainVariant::CapFinite: return "cap-finite";
    case ChainVariant::CapInfinite: return "cap-infinite";
    case ChainVariant::TransitFinite: return "transit-finite";
    case ChainVariant::TransitInfinite: return "transit-infinite";
  }
  return "?";
}

ChainVariant chain_variant_from_string(const std::string& s) {
  for (auto v : {ChainVariant::CapFinite, ChainVariant::CapInfinite,
                 ChainVariant::TransitFinite, ChainVariant::TransitInfinite})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown chain variant '" + s + "'");
}

std::string chain_center(int k) { return "v" + std::to_string(k); }
std::string chain_a(int k, int i) { return "a" + std::to_string(k) + "_" + std::to_string(i); }
std::string chain_b(int k, int i) { return "b" + std::to_string(k) + "_" + std::to_string(i); }

namespace {

Rational step_len(int k) { return Rational::pow2(-k); }
Rational cap_scale(int k) { return Rational::pow(Rational(1, 5), k); }
Rational gadget_start(int k) { return Rational(5) - Rational(5) * step_len(k); }
Rational gamma_i(int i) { return Rational::pow2(i) + Rational(4) * kEps; }

// Membership on [x_0, x_end) of the gadget frame of H_k (real time
// T_{0,k} + x * Delta_k); each entry opens a piece at x with the given value.
PiecewiseConstantFn frame_pattern(int k, const std::vector<std::pair<Rational, int>>& pieces,
                                  const Rational& x_end) {
  auto real = [&](const Rational& x) { return gadget_start(k) + x * step_len(k); };
  std::vector<Rational> b, v;
  for (const auto& [x, val] : pieces) {
    b.push_back(real(x));
    v.push_back(val);
  }
  return PiecewiseConstantFn(real(pieces.front().first), real(x_end), std::move(b),
                             std::move(v));
}

}  // namespace

GadgetBundle gen_counting_chain(int l, ChainVariant variant) {
  if (l < 1) throw std::invalid_argument("chain length must be positive");
  const bool infinite =
      variant == ChainVariant::CapInfinite || variant == ChainVariant::TransitInfinite;
  GadgetBundle g;
  g.network = terminals(infinite ? Horizon::infinite(0, 6) : Horizon::finite(0, 6));
  auto& net = g.network;

  for (int k = 0; k < l; ++k) {
    Rational load = 0;
    for (int i = 1; i <= l - k; ++i) load += cap_scale(k + i) * gamma_i(i);
    if (!(load < cap_scale(k) * (Rational(1) - kEps)))
      throw std::logic_error("capacity budget of v" + std::to_string(k) + " exceeded");
  }

  net.add_vertex(chain_center(0));
  switch (variant) {
    case ChainVariant::CapFinite:
      net.add_edge("s", "v0", 2, 1);
      net.add_edge("v0", "t", net.step_fn({0, 2}, {1, 3}), net.constant_fn(3));
      break;
    case ChainVariant::CapInfinite:
      net.add_edge("s", "v0", 2, 1);
      net.add_edge("v0", "t", net.step_fn({0, 2, 3}, {1, 3, 0}), net.constant_fn(3));
      break;
    case ChainVariant::TransitFinite:
    case ChainVariant::TransitInfinite:
      net.add_edge("s", "v0", net.constant_fn(2), net.step_fn({0, 1}, {1, 2}));
      net.add_edge("v0", "t", 1, 1);
      break;
  }

  for (int k = 1; k <= l; ++k) {
    const Rational d = step_len(k), lam = cap_scale(k);
    const std::string v = chain_center(k);
    net.add_vertex(v);
    for (int i = 1; i <= k; ++i) {
      net.add_vertex(chain_a(k, i));
      net.add_vertex(chain_b(k, i));
    }
    net.add_edge("s", v, lam * (Rational(1) - kEps), d);
    for (int i = 1; i <= k; ++i) {
      net.add_edge(chain_a(k, i), v, lam * Rational::pow2(i - 1), d);
      net.add_edge(v, chain_b(k, i), lam * Rational::pow2(i - 1), d);
    }
    for (int i = 1; i <= k; ++i)
      gen_mimicking(net, chain_a(k, i), chain_b(k, i),
                    lam * (Rational::pow2(i - 1) + Rational(2) * kEps),
                    lam * (Rational::pow2(i - 1) + kEps), (Rational::pow2(i) + 1) * d, d);
    for (int i = 1; i <= k; ++i)
      gen_mimicking(net, chain_center(k - i), chain_a(k, i), lam * gamma_i(i), lam * kEps,
                    Rational(3) * step_len(k - i) - Rational(5) * d, d);
  }

  g.expected_patterns.push_back(
      {"v0", PiecewiseConstantFn(1, 4, {1, 2, 3}, {1, 0, 1})});
  for (int k = 1; k <= l; ++k) {
    const long top = 1L << k;
    std::vector<std::pair<Rational, int>> vp;
    for (long x = 1; x <= top + 1; ++x) vp.emplace_back(Rational(x), x % 2 == 1 ? 1 : 0);
    g.expected_patterns.push_back({chain_center(k), frame_pattern(k, vp, Rational(top + 2))});
    for (int i = 1; i < k; ++i) {
      std::vector<std::pair<Rational, int>> ap{{Rational(-1), 1}};
      int val = 0;
      for (long x = 0; x < top; x += 1L << i, val ^= 1) ap.emplace_back(Rational(x), val);
      g.expected_patterns.push_back({chain_a(k, i), frame_pattern(k, ap, Rational(top))});
    }
    g.expected_patterns.push_back(
        {chain_a(k, k),
         frame_pattern(k, {{Rational(-1), 1}, {Rational(0), 0}, {Rational(top), 1}},
                       Rational(top + 1))});
  }
  g.provenance = "binary counting chain, length " + std::to_string(l) + ", " + to_string(variant);
  return g;
}

GadgetBundle gen_expflow_simplecut(int k, bool transit_variant) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Rational T = Rational::pow2(k);
  GadgetBundle g;
  g.network = terminals(Horizon::finite(0, T));
  auto& net = g.network;
  for (int i = 0; i <= k; ++i) net.add_vertex(chain_center(i));
  if (transit_variant)
    net.add_edge("s", "v0", net.constant_fn(1), net.step_fn({0, 1}, {0, T}));
  else
    net.add_edge("s", "v0", net.step_fn({0, 1}, {1, 0}), net.constant_fn(0));
  for (int i = 0; i < k; ++i) {
    net.add_edge(chain_center(i), chain_center(i + 1), 1, Rational::pow2(k - i - 1));
    net.add_edge(chain_center(i), chain_center(i + 1), 1, 0);
  }
  net.add_edge(chain_center(k), "t", Rational::pow2(-k), 0);
  g.predicted_value = Rational(1);
  g.reference_cut = constant_cut(net, {});
  g.reference_cut_is_minimum = true;
  g.provenance = std::string("complex flow, simple cut, k=") + std::to_string(k) +
                 (transit_variant ? ", transit jump" : ", capacity drop");
  return g;
}

GadgetBundle gen_expcut_simpleflow(int k, bool transit_variant) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Rational P = Rational::pow2(k);
  const Rational T = P + 1;
  const Rational c = Rational(1) / T;
  GadgetBundle g;
  g.network = terminals(Horizon::finite(0, T));
  auto& net = g.network;
  net.add_vertex("s'");
  for (int i = 0; i <= 2 * k; ++i) net.add_vertex(x_name(static_cast<std::size_t>(i)));
  for (int i = 0; i <= k; ++i) net.add_vertex(y_name(static_cast<std::size_t>(i)));

  const auto e_ss = net.add_edge("s", "s'", c, 0);
  net.add_edge("s'", x_name(0), 1, 1);
  for (int i = 0; i < 2 * k; ++i) {
    const Rational tau = i < k ? Rational::pow2(i + 1) : Rational::pow2(2 * k - i);
    net.add_edge(x_name(static_cast<std::size_t>(i)), x_name(static_cast<std::size_t>(i + 1)),
                 1, tau);
    net.add_edge(x_name(static_cast<std::size_t>(i)), x_name(static_cast<std::size_t>(i + 1)),
                 1, 0);
  }
  const auto e_sy = net.add_edge("s'", y_name(0), 1, 0);
  std::vector<std::pair<std::size_t, std::size_t>> ypairs;
  for (int i = 0; i < k; ++i) {
    const auto a = net.add_edge(y_name(static_cast<std::size_t>(i)),
                                y_name(static_cast<std::size_t>(i + 1)), 1,
                                Rational::pow2(k - i - 1));
    const auto b = net.add_edge(y_name(static_cast<std::size_t>(i)),
                                y_name(static_cast<std::size_t>(i + 1)), 1, 0);
    ypairs.emplace_back(a, b);
  }
  const auto e_yx = net.add_edge(y_name(static_cast<std::size_t>(k)),
                                 x_name(static_cast<std::size_t>(2 * k)), 1, 0);
  const auto e_xt =
      transit_variant
          ? net.add_edge(x_name(static_cast<std::size_t>(2 * k)), "t", net.constant_fn(1),
                         net.step_fn({0, P}, {T, 0}))
          : net.add_edge(x_name(static_cast<std::size_t>(2 * k)), "t", net.step_fn({0, P}, {0, 1}),
                         net.constant_fn(0));

  FlowBuilder fb(net);
  fb.add(e_ss, 1, T, c).add(e_sy, 1, T, c);
  for (int i = 0; i < k; ++i) {
    const Rational rate = Rational::pow2(i) * c;
    const Rational switch_at = P - Rational::pow2(k - i - 1) + 1;
    fb.add(ypairs[static_cast<std::size_t>(i)].first, P - Rational::pow2(k - i) + 1, switch_at,
           rate);
    fb.add(ypairs[static_cast<std::size_t>(i)].second, switch_at, T, rate);
  }
  fb.add(e_yx, P, T, P * c).add(e_xt, P, T, P * c);
  g.reference_flow = fb.build();
  g.predicted_value = P * c;
  g.provenance = std::string("complex cut, simple flow, k=") + std::to_string(k) +
                 (transit_variant ? ", transit drop" : ", capacity opening");
  return g;
}

DynamicNetwork gen_random_static(int n, int m, std::int64_t max_cap, std::int64_t max_transit,
                                 std::uint64_t seed) {
  if (n < 2 || m < 1 || max_cap < 1 || max_transit < 0)
    throw std::invalid_argument("random instance needs n >= 2, m >= 1, max_cap >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  std::vector<std::string> names{"s"};
  for (int i = 1; i + 1 < n; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("t");
  const std::uint64_t horizon_span =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(std::max<std::int64_t>(1, max_transit));
  const Rational T = R(1 + static_cast<std::int64_t>(draw(horizon_span)));
  DynamicNetwork net = terminals(Horizon::finite(0, T));
  net.vertices = names;
  for (int j = 0; j < m; ++j) {
    const auto u = draw(static_cast<std::uint64_t>(n - 1));
    const auto w = u + 1 + draw(static_cast<std::uint64_t>(n - 1) - u);
    const auto cap = 1 + static_cast<std::int64_t>(draw(static_cast<std::uint64_t>(max_cap)));
    const auto tau = static_cast<std::int64_t>(draw(static_cast<std::uint64_t>(max_transit + 1)));
    net.add_edge(names[u], names[w], R(cap), R(tau));
  }
  return net;
}

}  // namespace dynflow
