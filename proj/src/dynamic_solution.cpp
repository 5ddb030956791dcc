#include "dynflow/dynamic_solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynflow {

Rational entry_end(const Edge& e, const Rational& lo, const Rational& hi) {
  Rational end = lo;
  for (const auto& p : e.transit.pieces()) {
    const Rational last = min(p.hi, hi - p.value);
    if (p.lo < last) end = max(end, last);
  }
  return end;
}

namespace {

PiecewiseConstantFn flow_domain_fn(const Edge& e, const Rational& lo,
                                   const Rational& hi) {
  const Rational end = entry_end(e, lo, hi);
  return PiecewiseConstantFn::constant(lo, end > lo ? end : hi, 0);
}

std::vector<Rational> shifted_points(const PiecewiseConstantFn& head_fn,
                                     const PiecewiseConstantFn& transit,
                                     const Rational& hi) {
  std::vector<Rational> pts;
  for (const auto& p : transit.pieces()) {
    auto keep = [&](const Rational& x) {
      if (p.lo < x && x < p.hi) pts.push_back(x);
    };
    for (const auto& b : head_fn.breakpoints()) keep(b - p.value);
    keep(hi - p.value);
  }
  return pts;
}

std::vector<Rational> merged(std::vector<Rational> a, const std::vector<Rational>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

DynamicFlow zero_flow(const DynamicNetwork& net) {
  DynamicFlow f;
  for (const auto& e : net.edges)
    f.rates.push_back(flow_domain_fn(e, net.horizon.lo, net.horizon.hi));
  return f;
}

FlowBuilder::FlowBuilder(const DynamicNetwork& net) {
  for (const auto& e : net.edges) {
    const auto d = flow_domain_fn(e, net.horizon.lo, net.horizon.hi);
    acc_.emplace_back(d.domain_lo(), d.domain_hi());
  }
}

FlowBuilder& FlowBuilder::add(std::size_t edge, const Rational& a,
                              const Rational& b, const Rational& rate) {
  acc_.at(edge).add(a, b, rate);
  return *this;
}

DynamicFlow FlowBuilder::build() const {
  DynamicFlow f;
  for (const auto& a : acc_) f.rates.push_back(a.build());
  return f;
}

DynamicCut constant_cut(const DynamicNetwork& net,
                        const std::vector<std::string>& source_side) {
  DynamicCut c;
  for (const auto& v : net.vertices) {
    bool in = v == net.source ||
              std::find(source_side.begin(), source_side.end(), v) != source_side.end();
    if (v == net.target) in = false;
    c.membership.push_back(net.constant_fn(in ? 1 : 0));
  }
  return c;
}

DynamicFlow project_flow(const DynamicNetwork& net, const TimeExpandedGraph& g,
                         const StaticFlow& f) {
  std::vector<std::vector<std::pair<std::int64_t, Rational>>> per_edge(net.edges.size());
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    if (f.arc_flow[i].sign() != 0)
      per_edge[g.arcs[i].edge].emplace_back(g.arcs[i].step, f.arc_flow[i] / g.delta);

  DynamicFlow out;
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto dom = flow_domain_fn(net.edges[e], g.lo, g.hi);
    auto& steps = per_edge[e];
    std::sort(steps.begin(), steps.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Rational> b{dom.domain_lo()}, v{Rational(0)};
    for (const auto& [k, rate] : steps) {
      const Rational start = g.step_start(k);
      const Rational stop = start + g.delta;
      if (start == b.back()) {
        v.back() = rate;
      } else {
        b.push_back(start);
        v.push_back(rate);
      }
      if (stop < dom.domain_hi()) {
        b.push_back(stop);
        v.push_back(0);
      }
    }
    out.rates.emplace_back(dom.domain_lo(), dom.domain_hi(), std::move(b), std::move(v));
  }
  return out;
}

DynamicCut project_cut(const DynamicNetwork& net, const TimeExpandedGraph& g,
                       const StaticCut& c) {
  DynamicCut out;
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    const int vi = static_cast<int>(v);
    if (vi == g.source_vertex || vi == g.target_vertex) {
      out.membership.push_back(
          PiecewiseConstantFn::constant(g.lo, g.hi, vi == g.source_vertex ? 1 : 0));
      continue;
    }
    std::vector<Rational> b, vals;
    for (std::int64_t k = 0; k < g.steps; ++k) {
      const Rational m = c.source_side[static_cast<std::size_t>(g.node(vi, k))] ? 1 : 0;
      if (!vals.empty() && vals.back() == m) continue;
      b.push_back(g.step_start(k));
      vals.push_back(m);
    }
    out.membership.emplace_back(g.lo, g.hi, std::move(b), std::move(vals));
  }
  return out;
}

PiecewiseConstantFn arrival_rate(const PiecewiseConstantFn& rate,
                                 const PiecewiseConstantFn& transit,
                                 const Rational& lo, const Rational& hi) {
  StepAccumulator acc(lo, hi);
  const auto pts = refine(rate.domain_lo(), rate.domain_hi(), {&rate, &transit});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational& a = pts[i];
    const Rational b = i + 1 < pts.size() ? pts[i + 1] : rate.domain_hi();
    const Rational r = rate.eval(a, 0);
    if (r.is_zero()) continue;
    const Rational tau = transit.eval(a, transit.last_value());
    acc.add(a + tau, b + tau, r);
  }
  return acc.build();
}

namespace {

// Net inflow rate (arrivals minus departures) of every vertex.
std::vector<PiecewiseConstantFn> net_inflow(const DynamicNetwork& net,
                                            const DynamicFlow& flow) {
  const Rational& lo = net.horizon.lo;
  const Rational& hi = net.horizon.hi;
  const auto idx = net.vertex_index();
  std::vector<StepAccumulator> acc(net.vertices.size(), StepAccumulator(lo, hi));
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    const auto& f = flow.rates[e];
    for (const auto& p : f.pieces())
      acc[static_cast<std::size_t>(idx.at(edge.tail))].add(p.lo, p.hi, -p.value);
    const auto arr = arrival_rate(f, edge.transit, lo, hi);
    for (const auto& p : arr.pieces())
      acc[static_cast<std::size_t>(idx.at(edge.head))].add(p.lo, p.hi, p.value);
  }
  std::vector<PiecewiseConstantFn> out;
  for (const auto& a : acc) out.push_back(a.build());
  return out;
}

}  // namespace

Rational excess(const DynamicNetwork& net, const DynamicFlow& flow,
                const std::string& vertex, const Rational& t) {
  const Rational& lo = net.horizon.lo;
  Rational total = 0;
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    if (edge.tail == vertex) total -= flow.rates[e].integrate(lo, max(lo, t));
    if (edge.head == vertex)
      total += arrival_rate(flow.rates[e], edge.transit, lo, net.horizon.hi)
                   .integrate(lo, max(lo, t));
  }
  return total;
}

Rational flow_value(const DynamicNetwork& net, const DynamicFlow& flow) {
  const Rational in_t = excess(net, flow, net.target, net.horizon.hi);
  const Rational out_s = -excess(net, flow, net.source, net.horizon.hi);
  if (in_t != out_s)
    throw std::logic_error("flow value mismatch: ex(t,T)=" + in_t.str() +
                           " but -ex(s,T)=" + out_s.str());
  return in_t;
}

Rational cut_capacity(const DynamicNetwork& net, const DynamicCut& cut) {
  const Rational& lo = net.horizon.lo;
  const Rational& hi = net.horizon.hi;
  const auto idx = net.vertex_index();
  Rational total = 0;
  for (const auto& e : net.edges) {
    const auto& st = cut.membership[static_cast<std::size_t>(idx.at(e.tail))];
    const auto& sh = cut.membership[static_cast<std::size_t>(idx.at(e.head))];
    const auto pts = merged(refine(lo, hi, {&e.capacity, &e.transit, &st}),
                            shifted_points(sh, e.transit, hi));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Rational& a = pts[i];
      const Rational b = i + 1 < pts.size() ? pts[i + 1] : hi;
      if (st.eval(a, 1) != 1) continue;
      if (sh.eval(a + e.transit.eval(a, 0), 1) != 0) continue;
      total += e.capacity.eval(a, 0) * (b - a);
    }
  }
  return total;
}

std::vector<Diagnostic> check_feasible(const DynamicNetwork& net,
                                       const DynamicFlow& flow) {
  std::vector<Diagnostic> out;
  const Rational& lo = net.horizon.lo;
  const Rational& hi = net.horizon.hi;
  if (flow.rates.size() != net.edges.size()) {
    out.push_back({"flow", "edge count mismatch"});
    return out;
  }
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    const auto& f = flow.rates[e];
    const auto pts = refine(f.domain_lo(), f.domain_hi(), {&f, &edge.capacity, &edge.transit});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Rational& a = pts[i];
      const Rational b = i + 1 < pts.size() ? pts[i + 1] : f.domain_hi();
      const Rational r = f.eval(a, 0);
      if (r.is_zero()) continue;
      const std::string where = net.edge_label(e) + " on [" + a.str() + "," + b.str() + ")";
      if (r.sign() < 0) out.push_back({where, "negative flow rate " + r.str()});
      const Rational u = edge.capacity.eval(a, 0);
      if (u < r)
        out.push_back({where, "rate " + r.str() + " exceeds capacity " + u.str()});
      if (a < lo || hi < b + edge.transit.eval(a, 0))
        out.push_back({where, "flow does not arrive within the horizon"});
    }
  }
  const auto inflow = net_inflow(net, flow);
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    const auto& name = net.vertices[v];
    if (name == net.source || name == net.target) continue;
    Rational ex = 0;
    for (const auto& p : inflow[v].pieces()) {
      ex += p.value * (p.hi - p.lo);
      if (!ex.is_zero()) {
        out.push_back({name, "conservation violated: excess " + ex.str() + " at " +
                                 p.hi.str()});
        break;
      }
    }
  }
  return out;
}

std::vector<Diagnostic> check_cut(const DynamicNetwork& net, const DynamicCut& cut) {
  std::vector<Diagnostic> out;
  if (cut.membership.size() != net.vertices.size()) {
    out.push_back({"cut", "vertex count mismatch"});
    return out;
  }
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    const auto& m = cut.membership[v];
    for (const auto& x : m.values())
      if (x != 0 && x != 1) out.push_back({net.vertices[v], "membership not 0/1"});
    if (net.vertices[v] == net.source && (m.min_value() != 1))
      out.push_back({net.source, "source leaves the source side"});
    if (net.vertices[v] == net.target && (m.max_value() != 0))
      out.push_back({net.target, "target joins the source side"});
  }
  return out;
}

std::vector<Diagnostic> saturation_violations(const DynamicNetwork& net,
                                              const DynamicFlow& flow,
                                              const DynamicCut& cut) {
  std::vector<Diagnostic> out;
  const Rational& lo = net.horizon.lo;
  const Rational& hi = net.horizon.hi;
  const auto idx = net.vertex_index();
  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const auto& e = net.edges[ei];
    const auto& f = flow.rates[ei];
    const auto& st = cut.membership[static_cast<std::size_t>(idx.at(e.tail))];
    const auto& sh = cut.membership[static_cast<std::size_t>(idx.at(e.head))];
    const auto pts = merged(refine(lo, hi, {&e.capacity, &e.transit, &st, &f}),
                            merged(shifted_points(sh, e.transit, hi),
                                   {f.domain_hi()}));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Rational& a = pts[i];
      if (!(a < hi)) continue;
      const Rational b = i + 1 < pts.size() ? pts[i + 1] : hi;
      const Rational tail = st.eval(a, 1);
      const Rational head = sh.eval(a + e.transit.eval(a, 0), 1);
      const Rational r = f.eval(a, 0);
      const std::string where = net.edge_label(ei) + " on [" + a.str() + "," + b.str() + ")";
      if (tail == 1 && head == 0 && r != e.capacity.eval(a, 0))
        out.push_back({where, "contributing edge not saturated"});
      if (tail == 0 && head == 1 && !r.is_zero())
        out.push_back({where, "backward crossing edge carries flow"});
    }
  }
  return out;
}

ComplexityCounts complexity(const DynamicFlow& flow, const DynamicCut& cut) {
  ComplexityCounts c;
  for (const auto& m : cut.membership) {
    c.per_vertex.push_back(count_changes(m));
    c.cut_total += c.per_vertex.back();
  }
  for (const auto& f : flow.rates) {
    c.per_edge.push_back(count_changes(f));
    c.flow_total += c.per_edge.back();
  }
  return c;
}

}  // namespace dynflow
