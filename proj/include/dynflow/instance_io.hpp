#pragma once

#include <filesystem>
#include <stdexcept>

#include "json.hpp"
#include "dynflow/network.hpp"

namespace dynflow {

/// Raised for malformed instance or report documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"breakpoints": [...], "values": [...]}; the domain comes from context.
nlohmann::json step_fn_to_json(const PiecewiseConstantFn& f);
PiecewiseConstantFn step_fn_from_json(const nlohmann::json& j, const Rational& lo,
                                      const Rational& hi);

nlohmann::json network_to_json(const DynamicNetwork& net);
DynamicNetwork network_from_json(const nlohmann::json& j);

DynamicNetwork load_network(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace dynflow
