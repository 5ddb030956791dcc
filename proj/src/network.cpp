#include "dynflow/network.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace dynflow {

std::unordered_map<std::string, int> DynamicNetwork::vertex_index() const {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    idx.emplace(vertices[i], static_cast<int>(i));
  return idx;
}

int DynamicNetwork::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  throw std::out_of_range("unknown vertex '" + name + "'");
}

void DynamicNetwork::add_vertex(const std::string& name) {
  for (const auto& v : vertices)
    if (v == name) return;
  vertices.push_back(name);
}

std::size_t DynamicNetwork::add_edge(std::string tail, std::string head,
                                     PiecewiseConstantFn capacity,
                                     PiecewiseConstantFn transit) {
  add_vertex(tail);
  add_vertex(head);
  edges.push_back({std::move(tail), std::move(head), std::move(capacity),
                   std::move(transit)});
  return edges.size() - 1;
}

std::size_t DynamicNetwork::add_edge(std::string tail, std::string head,
                                     Rational capacity, Rational transit) {
  return add_edge(std::move(tail), std::move(head),
                  constant_fn(std::move(capacity)),
                  constant_fn(std::move(transit)));
}

PiecewiseConstantFn DynamicNetwork::constant_fn(Rational value) const {
  return PiecewiseConstantFn::constant(horizon.lo, horizon.hi, std::move(value));
}

PiecewiseConstantFn DynamicNetwork::step_fn(std::vector<Rational> breakpoints,
                                            std::vector<Rational> values) const {
  if (breakpoints.empty() || breakpoints.front() != horizon.lo) {
    breakpoints.insert(breakpoints.begin(), horizon.lo);
    values.insert(values.begin(), values.empty() ? Rational(0) : values.front());
  }
  return PiecewiseConstantFn(horizon.lo, horizon.hi, std::move(breakpoints),
                             std::move(values));
}

bool DynamicNetwork::is_static() const {
  for (const auto& e : edges)
    if (!e.capacity.is_constant() || !e.transit.is_constant()) return false;
  return true;
}

Rational DynamicNetwork::max_transit() const {
  Rational m = 0;
  for (const auto& e : edges) m = max(m, e.transit.max_value());
  return m;
}

std::string DynamicNetwork::edge_label(std::size_t e) const {
  return "e" + std::to_string(e) + ":" + edges[e].tail + "->" + edges[e].head;
}

std::vector<Diagnostic> validate(const DynamicNetwork& net) {
  std::vector<Diagnostic> out;
  std::set<std::string> names;
  for (const auto& v : net.vertices)
    if (!names.insert(v).second) out.push_back({v, "duplicate vertex"});
  if (!names.count(net.source)) out.push_back({net.source, "source not a vertex"});
  if (!names.count(net.target)) out.push_back({net.target, "target not a vertex"});
  if (net.source == net.target) out.push_back({net.source, "source equals target"});
  if (!(net.horizon.lo < net.horizon.hi))
    out.push_back({"horizon", "horizon start must precede its end"});

  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const auto& e = net.edges[i];
    const std::string where = net.edge_label(i);
    if (!names.count(e.tail)) out.push_back({where, "unknown tail vertex"});
    if (!names.count(e.head)) out.push_back({where, "unknown head vertex"});
    if (e.tail == e.head) out.push_back({where, "self-loop"});
    for (const auto* fn : {&e.capacity, &e.transit}) {
      const char* what = fn == &e.capacity ? "capacity" : "transit";
      if (fn->domain_lo() != net.horizon.lo || fn->domain_hi() != net.horizon.hi)
        out.push_back({where, std::string(what) + " domain differs from horizon"});
      if (fn->min_value().sign() < 0)
        out.push_back({where, std::string("negative ") + what});
    }
  }
  return out;
}

Rational common_step(const DynamicNetwork& net) {
  const Rational& lo = net.horizon.lo;
  std::vector<Rational> events{net.horizon.hi - lo};
  for (const auto& e : net.edges) {
    for (const auto& b : e.capacity.breakpoints()) events.push_back(b - lo);
    for (const auto& b : e.transit.breakpoints()) events.push_back(b - lo);
    for (const auto& v : e.transit.values()) events.push_back(v);
  }
  for (const auto& v : events)
    if (v.sign() < 0) throw std::invalid_argument("event before horizon start");
  return rat_gcd(events);
}

Rational padding_unit(const DynamicNetwork& net) {
  return Rational(static_cast<long>(net.vertices.size())) *
         max(net.max_transit(), Rational(1));
}

DynamicNetwork finite_window(const DynamicNetwork& net, std::int64_t padding) {
  if (padding <= 0) throw std::invalid_argument("padding must be positive");
  const Rational pad = Rational(static_cast<long>(padding)) * padding_unit(net);
  DynamicNetwork out = net;
  out.horizon = Horizon::finite(net.horizon.lo - pad, net.horizon.hi + pad);
  for (auto& e : out.edges) {
    e.capacity = e.capacity.extended(out.horizon.lo, out.horizon.hi);
    e.transit = e.transit.extended(out.horizon.lo, out.horizon.hi);
  }
  return out;
}

DynamicNetwork scale_network(const DynamicNetwork& net, const Rational& r,
                             const Rational& shift, const Rational& c) {
  DynamicNetwork out = net;
  out.horizon.lo = r * net.horizon.lo + shift;
  out.horizon.hi = r * net.horizon.hi + shift;
  for (auto& e : out.edges) {
    e.capacity = e.capacity.time_affine(r, shift).scaled(c);
    e.transit = e.transit.time_affine(r, shift).scaled(r);
  }
  return out;
}

PartitionInstance::PartitionInstance(std::vector<std::int64_t> items)
    : items_(std::move(items)) {
  if (items_.empty()) throw std::invalid_argument("partition instance is empty");
  std::int64_t sum = 0;
  for (auto b : items_) {
    if (b <= 0) throw std::invalid_argument("partition items must be positive");
    sum += b;
  }
  if (sum % 2 != 0) throw std::invalid_argument("partition sum must be even");
  half_ = sum / 2;
}

}  // namespace dynflow
