#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynflow/network.hpp"
#include "dynflow/solve.hpp"

namespace dynflow {

struct PartitionAnswer {
  bool solvable = false;
  std::vector<std::size_t> witness;  // item positions summing to L
};

/// Subset-sum dynamic program over target L.
PartitionAnswer partition_solvable(const PartitionInstance& p);

enum class ReductionVariant { Capacity, CapacityInfinite, TransitFinite };

std::string to_string(ReductionVariant v);
ReductionVariant reduction_variant_from_string(const std::string& s);

struct ReductionCheck {
  bool solvable = false;
  Rational value;
  Rational threshold;
  bool meets_threshold = false;
  bool equivalent = false;
  std::int64_t padding = 0;
};

/// Solves the reduction instance and compares the threshold outcome with the
/// subset-sum answer.
ReductionCheck verify_reduction(const PartitionInstance& p, ReductionVariant variant,
                                const SolveOptions& options = {});

inline constexpr std::int64_t kTinyOracleMaxNodes = 200;

/// Max-flow value from a private dense time expansion and plain depth-first
/// augmentation. Throws BudgetExceeded above max_nodes expanded nodes.
Rational tiny_flow_oracle(const DynamicNetwork& net,
                          std::int64_t max_nodes = kTinyOracleMaxNodes);

}  // namespace dynflow
