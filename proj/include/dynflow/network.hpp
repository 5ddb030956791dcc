#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynflow/piecewise.hpp"

namespace dynflow {

struct Horizon {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  // Finite: the considered interval. Infinite: the core interval that holds
  // every capacity and transit change.
  Rational lo = 0;
  Rational hi = 1;

  static Horizon finite(Rational lo, Rational hi) {
    return {Kind::Finite, std::move(lo), std::move(hi)};
  }
  static Horizon infinite(Rational core_lo, Rational core_hi) {
    return {Kind::Infinite, std::move(core_lo), std::move(core_hi)};
  }
  bool is_finite() const { return kind == Kind::Finite; }
  Rational length() const { return hi - lo; }
};

/// Capacity is a rate (flow per unit time); transit is the traversal time of
/// flow that enters at a given moment. Both live on the horizon interval; for
/// infinite horizons the first and last pieces continue indefinitely.
struct Edge {
  std::string tail;
  std::string head;
  PiecewiseConstantFn capacity;
  PiecewiseConstantFn transit;
};

struct Diagnostic {
  std::string where;
  std::string message;
};

/// Directed network with time-dependent capacities and transit times. Parallel
/// edges are allowed and edges are identified by their index.
struct DynamicNetwork {
  std::vector<std::string> vertices;
  std::string source;
  std::string target;
  std::vector<Edge> edges;
  Horizon horizon;

  std::unordered_map<std::string, int> vertex_index() const;
  int index_of(const std::string& name) const;
  /// Adds a vertex if it is not present yet.
  void add_vertex(const std::string& name);
  /// Adds an edge with functions on the horizon interval; returns its index.
  std::size_t add_edge(std::string tail, std::string head,
                       PiecewiseConstantFn capacity, PiecewiseConstantFn transit);
  /// Constant capacity and transit.
  std::size_t add_edge(std::string tail, std::string head, Rational capacity,
                       Rational transit);
  PiecewiseConstantFn constant_fn(Rational value) const;
  /// Step function on the horizon from (breakpoint, value) pairs.
  PiecewiseConstantFn step_fn(std::vector<Rational> breakpoints,
                              std::vector<Rational> values) const;

  bool is_static() const;
  Rational max_transit() const;
  std::string edge_label(std::size_t e) const;
};

/// Every invariant violation; empty iff the instance is admissible.
std::vector<Diagnostic> validate(const DynamicNetwork& net);

/// Largest step such that every breakpoint, transit value and the horizon
/// length are integer multiples of it, measured from the horizon start.
Rational common_step(const DynamicNetwork& net);

/// Width of one padding unit used when realizing an infinite horizon:
/// |V| * max(max transit, 1).
Rational padding_unit(const DynamicNetwork& net);

/// Finite copy of an infinite-horizon network on
/// [core_lo - n*W, core_hi + n*W] with W = padding_unit(net).
DynamicNetwork finite_window(const DynamicNetwork& net, std::int64_t padding);

/// Time map x -> r*x + shift applied to horizon, breakpoints and transits;
/// capacities multiplied by c.
DynamicNetwork scale_network(const DynamicNetwork& net, const Rational& r,
                             const Rational& shift, const Rational& c);

/// Positive integers b_1..b_k with an even sum 2L (duplicates allowed).
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<std::int64_t> items);
  const std::vector<std::int64_t>& items() const { return items_; }
  std::int64_t half() const { return half_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<std::int64_t> items_;
  std::int64_t half_;
};

}  // namespace dynflow
