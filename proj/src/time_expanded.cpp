#include "dynflow/time_expanded.hpp"

#include <deque>
#include <optional>
#include <tuple>

#include "dynflow/maxflow.hpp"

namespace dynflow {

int TimeExpandedGraph::node(int vertex, std::int64_t step) const {
  if (vertex == source_vertex) return kSource;
  if (vertex == target_vertex) return kSink;
  return static_cast<int>(2 + slot[static_cast<std::size_t>(vertex)] * steps + step);
}

int TimeExpandedGraph::vertex_of(int n) const {
  if (n == kSource) return source_vertex;
  if (n == kSink) return target_vertex;
  return slot_vertex.at(static_cast<std::size_t>((n - 2) / steps));
}

std::int64_t TimeExpandedGraph::step_of(int n) const { return (n - 2) % steps; }

TimeExpandedGraph expand(const DynamicNetwork& net, const Rational& delta,
                         std::int64_t max_nodes) {
  if (!net.horizon.is_finite())
    throw std::invalid_argument("expand needs a finite horizon");
  if (delta.sign() <= 0) throw std::invalid_argument("step must be positive");
  if (!(common_step(net) / delta).is_integer())
    throw std::invalid_argument("step " + delta.str() +
                                " does not divide every event time and transit");

  TimeExpandedGraph g;
  g.lo = net.horizon.lo;
  g.hi = net.horizon.hi;
  g.delta = delta;
  g.steps = (net.horizon.length() / delta).to_int64();
  g.vertex_names = net.vertices;
  const auto idx = net.vertex_index();
  g.source_vertex = idx.at(net.source);
  g.target_vertex = idx.at(net.target);
  g.slot.assign(net.vertices.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < net.vertices.size(); ++v)
    if (static_cast<int>(v) != g.source_vertex && static_cast<int>(v) != g.target_vertex)
    {
      g.slot[v] = next++;
      g.slot_vertex.push_back(static_cast<int>(v));
    }
  g.node_count = 2 + static_cast<std::int64_t>(next) * g.steps;
  if (g.node_count > max_nodes)
    throw BudgetExceeded("expanded graph needs " + std::to_string(g.node_count) +
                         " nodes, budget is " + std::to_string(max_nodes));

  for (std::size_t ei = 0; ei < net.edges.size(); ++ei) {
    const auto& e = net.edges[ei];
    const int tail = idx.at(e.tail), head = idx.at(e.head);
    if (head == g.source_vertex || tail == g.target_vertex) continue;
    const auto cuts = refine(g.lo, g.hi, {&e.capacity, &e.transit});
    for (std::size_t p = 0; p < cuts.size(); ++p) {
      const Rational& a = cuts[p];
      const Rational b = p + 1 < cuts.size() ? cuts[p + 1] : g.hi;
      const Rational u = e.capacity.eval(a, 0);
      if (u.is_zero()) continue;
      const Rational cap = u * delta;
      const std::int64_t shift = (e.transit.eval(a, 0) / delta).to_int64();
      const std::int64_t first = ((a - g.lo) / delta).to_int64();
      const std::int64_t last = ((b - g.lo) / delta).to_int64();
      for (std::int64_t k = first; k < last; ++k) {
        const std::int64_t arrive = k + shift;
        if (arrive >= g.steps) break;
        g.arcs.push_back({g.node(tail, k), g.node(head, arrive), cap, ei, k, arrive});
      }
    }
  }
  return g;
}

namespace {

// Exact integer image of the capacities, if it fits comfortably in int64.
std::optional<std::pair<std::vector<std::int64_t>, mpz_class>> scale_to_integers(
    const std::vector<Rational>& caps) {
  const mpz_class d = common_denominator(caps);
  std::vector<std::int64_t> out;
  out.reserve(caps.size());
  mpz_class total = 0;
  const mpz_class limit = mpz_class(1) << 62;
  for (const auto& c : caps) {
    const mpz_class v = c.raw().get_num() * (d / c.raw().get_den());
    total += v;
    if (total >= limit) return std::nullopt;
    out.push_back(v.get_si());
  }
  return std::make_pair(std::move(out), d);
}

template <typename Scalar, typename Solver, typename Caps>
void load(Solver& s, const TimeExpandedGraph& g, const Caps& caps) {
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    s.add_arc(g.arcs[i].from, g.arcs[i].to, Scalar(caps[i]));
}

std::vector<Rational> capacities(const TimeExpandedGraph& g) {
  std::vector<Rational> caps;
  caps.reserve(g.arcs.size());
  for (const auto& a : g.arcs) caps.push_back(a.capacity);
  return caps;
}

// Adjacency of the residual graph: for each node, arcs leaving it with
// positive residual (forward: flow < capacity, backward: flow > 0).
std::vector<char> residual_reach(const TimeExpandedGraph& g, const StaticFlow& f,
                                 int start, bool forward) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.node_count));
  std::vector<std::vector<int>> in(static_cast<std::size_t>(g.node_count));
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const auto& a = g.arcs[i];
    if (f.arc_flow[i] < a.capacity) {
      out[static_cast<std::size_t>(a.from)].push_back(a.to);
      in[static_cast<std::size_t>(a.to)].push_back(a.from);
    }
    if (f.arc_flow[i].sign() > 0) {
      out[static_cast<std::size_t>(a.to)].push_back(a.from);
      in[static_cast<std::size_t>(a.from)].push_back(a.to);
    }
  }
  const auto& adj = forward ? out : in;
  std::vector<char> seen(static_cast<std::size_t>(g.node_count), 0);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
  }
  return seen;
}

}  // namespace

StaticFlow max_flow(const TimeExpandedGraph& g) {
  const int n = static_cast<int>(g.node_count);
  StaticFlow f;
  f.arc_flow.reserve(g.arcs.size());
  const auto caps = capacities(g);
  if (auto scaled = scale_to_integers(caps)) {
    Dinic<std::int64_t> solver(n);
    load<std::int64_t>(solver, g, scaled->first);
    const std::int64_t v = solver.run(TimeExpandedGraph::kSource, TimeExpandedGraph::kSink);
    const mpz_class& d = scaled->second;
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
      f.arc_flow.emplace_back(mpz_class(static_cast<long>(solver.flow(static_cast<int>(i)))), d);
    f.value = Rational(mpz_class(static_cast<long>(v)), d);
  } else {
    Dinic<Rational> solver(n);
    load<Rational>(solver, g, caps);
    f.value = solver.run(TimeExpandedGraph::kSource, TimeExpandedGraph::kSink);
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
      f.arc_flow.push_back(solver.flow(static_cast<int>(i)));
  }
  return f;
}

StaticCut min_cut(const TimeExpandedGraph& g, const StaticFlow& f) {
  StaticCut c{residual_reach(g, f, TimeExpandedGraph::kSource, true)};
  if (c.source_side[TimeExpandedGraph::kSink])
    throw std::logic_error("flow is not maximum: residual path to the sink");
  return c;
}

StaticCut min_cut_sink_side(const TimeExpandedGraph& g, const StaticFlow& f) {
  auto reach = residual_reach(g, f, TimeExpandedGraph::kSink, false);
  if (reach[TimeExpandedGraph::kSource])
    throw std::logic_error("flow is not maximum: residual path to the sink");
  for (auto& x : reach) x = !x;
  return {std::move(reach)};
}

Rational crossing_capacity(const TimeExpandedGraph& g, const StaticCut& c) {
  Rational total = 0;
  for (const auto& a : g.arcs)
    if (c.source_side[static_cast<std::size_t>(a.from)] &&
        !c.source_side[static_cast<std::size_t>(a.to)])
      total += a.capacity;
  return total;
}

Rational max_flow_oracle(const TimeExpandedGraph& g) {
  const int n = static_cast<int>(g.node_count);
  const auto caps = capacities(g);
  if (auto scaled = scale_to_integers(caps)) {
    PushRelabel<std::int64_t> solver(n);
    load<std::int64_t>(solver, g, scaled->first);
    const auto v = solver.run(TimeExpandedGraph::kSource, TimeExpandedGraph::kSink);
    return Rational(mpz_class(static_cast<long>(v)), scaled->second);
  }
  PushRelabel<Rational> solver(n);
  load<Rational>(solver, g, caps);
  return solver.run(TimeExpandedGraph::kSource, TimeExpandedGraph::kSink);
}

Rational static_max_flow_value(int nodes, int source, int sink,
                               const std::vector<std::tuple<int, int, Rational>>& arcs) {
  Dinic<Rational> solver(nodes);
  for (const auto& [u, v, c] : arcs) solver.add_arc(u, v, c);
  return solver.run(source, sink);
}

}  // namespace dynflow
