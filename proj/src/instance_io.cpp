#include "dynflow/instance_io.hpp"

#include <fstream>

namespace dynflow {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("rational must be a \"num/den\" string");
}

json step_fn_to_json(const PiecewiseConstantFn& f) {
  json b = json::array(), v = json::array();
  for (const auto& x : f.breakpoints()) b.push_back(x.str());
  for (const auto& x : f.values()) v.push_back(x.str());
  return {{"breakpoints", b}, {"values", v}};
}

PiecewiseConstantFn step_fn_from_json(const json& j, const Rational& lo,
                                      const Rational& hi) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
    throw FormatError("step function needs breakpoints and values");
  std::vector<Rational> b, v;
  for (const auto& x : j.at("breakpoints")) b.push_back(rational_from_json(x));
  for (const auto& x : j.at("values")) v.push_back(rational_from_json(x));
  try {
    return PiecewiseConstantFn(lo, hi, std::move(b), std::move(v));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json network_to_json(const DynamicNetwork& net) {
  json h;
  if (net.horizon.is_finite())
    h = {{"kind", "finite"}, {"lo", net.horizon.lo.str()}, {"hi", net.horizon.hi.str()}};
  else
    h = {{"kind", "infinite"},
         {"core_lo", net.horizon.lo.str()},
         {"core_hi", net.horizon.hi.str()}};
  json edges = json::array();
  for (const auto& e : net.edges)
    edges.push_back({{"tail", e.tail},
                     {"head", e.head},
                     {"capacity", step_fn_to_json(e.capacity)},
                     {"transit", step_fn_to_json(e.transit)}});
  return {{"vertices", net.vertices},
          {"source", net.source},
          {"target", net.target},
          {"horizon", h},
          {"edges", edges}};
}

DynamicNetwork network_from_json(const json& j) {
  try {
    DynamicNetwork net;
    net.vertices = j.at("vertices").get<std::vector<std::string>>();
    net.source = j.at("source").get<std::string>();
    net.target = j.at("target").get<std::string>();
    const auto& h = j.at("horizon");
    const auto kind = h.at("kind").get<std::string>();
    if (kind == "finite")
      net.horizon = Horizon::finite(rational_from_json(h.at("lo")),
                                    rational_from_json(h.at("hi")));
    else if (kind == "infinite")
      net.horizon = Horizon::infinite(rational_from_json(h.at("core_lo")),
                                      rational_from_json(h.at("core_hi")));
    else
      throw FormatError("unknown horizon kind '" + kind + "'");
    if (!(net.horizon.lo < net.horizon.hi))
      throw FormatError("horizon start must precede its end");
    for (const auto& e : j.at("edges"))
      net.edges.push_back(
          {e.at("tail").get<std::string>(), e.at("head").get<std::string>(),
           step_fn_from_json(e.at("capacity"), net.horizon.lo, net.horizon.hi),
           step_fn_from_json(e.at("transit"), net.horizon.lo, net.horizon.hi)});
    return net;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed instance: ") + e.what());
  }
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

DynamicNetwork load_network(const std::filesystem::path& path) {
  return network_from_json(load_json(path));
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace dynflow
