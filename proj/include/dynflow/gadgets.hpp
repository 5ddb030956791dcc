#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynflow/dynamic_solution.hpp"

namespace dynflow {

/// Expected cut membership of one vertex on the domain of `membership`.
struct PatternAssertion {
  std::string vertex;
  PiecewiseConstantFn membership;
};

struct GadgetBundle {
  DynamicNetwork network;
  std::optional<Rational> predicted_value;
  /// For reductions: the value that is reached iff the source instance is a
  /// yes-instance.
  std::optional<Rational> threshold;
  std::optional<DynamicFlow> reference_flow;
  std::optional<DynamicCut> reference_cut;
  bool reference_cut_is_minimum = false;
  std::vector<PatternAssertion> expected_patterns;
  std::string provenance;
};

/// Partition reduction with one capacity change and a finite horizon.
GadgetBundle gen_partition_cap(const PartitionInstance& p);
/// Same reduction in infinite time; (x_k, t) is open on [L+1, L+2) only.
GadgetBundle gen_partition_cap_inf(const PartitionInstance& p);

enum class HorizonMode { Finite, Infinite };
/// Partition reduction with one transit change.
GadgetBundle gen_partition_transit(const PartitionInstance& p, HorizonMode mode);

/// Transits of all x_0 -> x_k bypass routes used by the transit reduction.
std::vector<std::int64_t> bypass_transits(std::int64_t half, bool extended);

struct MimicEdges {
  std::size_t ab;
  std::size_t bt;
};

/// Adds (a, b) with capacity alpha and (b, t) with capacity beta so that b
/// copies the cut side of a with delay tau_ab. Throws std::invalid_argument
/// unless alpha exceeds the total out-capacity of b (beta included) and beta
/// exceeds the total in-capacity of b from other edges.
MimicEdges gen_mimicking(DynamicNetwork& net, const std::string& a, const std::string& b,
                         const Rational& alpha, const Rational& beta,
                         const Rational& tau_ab, const Rational& tau_bt);

enum class ChainVariant { CapFinite, CapInfinite, TransitFinite, TransitInfinite };
std::string to_string(ChainVariant v);
ChainVariant chain_variant_from_string(const std::string& s);

/// Chain of binary counting gadgets H_1..H_l fed by a start gadget.
GadgetBundle gen_counting_chain(int l, ChainVariant variant);

/// Vertex names used by the counting chain.
std::string chain_center(int k);
std::string chain_a(int k, int i);
std::string chain_b(int k, int i);

/// Every maximum flow is complex while a constant minimum cut exists.
GadgetBundle gen_expflow_simplecut(int k, bool transit_variant = false);
/// Every minimum cut is complex while a flow with one change per edge exists.
GadgetBundle gen_expcut_simpleflow(int k, bool transit_variant = false);

/// Random acyclic network with constant integer data; deterministic in seed.
DynamicNetwork gen_random_static(int n, int m, std::int64_t max_cap,
                                 std::int64_t max_transit, std::uint64_t seed);

}  // namespace dynflow
