#pragma once

#include <random>

#include "dynflow/gadgets.hpp"

namespace testsupport {

using dynflow::DynamicNetwork;
using dynflow::PiecewiseConstantFn;
using dynflow::Rational;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long max_num, long max_den) {
    return Rational(integer(0, max_num), integer(1, max_den));
  }
  bool coin() { return rng() % 2 == 0; }

  // Step function on [lo, hi) with breakpoints on a grid of width `grid`.
  PiecewiseConstantFn step(const Rational& lo, const Rational& hi, const Rational& grid,
                           long max_value) {
    const long cells = ((hi - lo) / grid).to_int64();
    std::vector<Rational> b{lo}, v{Rational(integer(0, max_value))};
    for (long c = 1; c < cells; ++c)
      if (integer(0, 3) == 0) {
        b.push_back(lo + grid * Rational(c));
        v.push_back(Rational(integer(0, max_value)));
      }
    return PiecewiseConstantFn(lo, hi, b, v);
  }
};

inline DynamicNetwork single_edge(Rational cap, Rational transit, Rational T) {
  DynamicNetwork net;
  net.source = "s";
  net.target = "t";
  net.horizon = dynflow::Horizon::finite(0, T);
  net.add_vertex("s");
  net.add_vertex("t");
  net.add_edge("s", "t", cap, transit);
  return net;
}

// Random acyclic network with integer event times and time-dependent data.
inline DynamicNetwork random_dynamic(Gen& g, int n, int m, bool dynamic_transit) {
  DynamicNetwork net;
  net.source = "s";
  net.target = "t";
  const Rational T(g.integer(2, 8));
  net.horizon = dynflow::Horizon::finite(0, T);
  net.add_vertex("s");
  for (int i = 1; i + 1 < n; ++i) net.add_vertex("v" + std::to_string(i));
  net.add_vertex("t");
  std::vector<std::string> order{"s"};
  for (int i = 1; i + 1 < n; ++i) order.push_back("v" + std::to_string(i));
  order.push_back("t");
  for (int j = 0; j < m; ++j) {
    const long u = g.integer(0, n - 2);
    const long w = g.integer(u + 1, n - 1);
    auto cap = g.step(0, T, 1, 3);
    auto tau = dynamic_transit ? g.step(0, T, 1, 2)
                               : PiecewiseConstantFn::constant(0, T, g.integer(0, 2));
    net.add_edge(order[static_cast<std::size_t>(u)], order[static_cast<std::size_t>(w)], cap, tau);
  }
  return net;
}

}  // namespace testsupport
