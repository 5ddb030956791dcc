#include "dynflow/temporally_repeated.hpp"

#include <optional>
#include <stdexcept>

namespace dynflow {

namespace {

void require_static(const DynamicNetwork& net) {
  if (!net.is_static())
    throw std::invalid_argument("temporally repeated flows need constant capacities and transits");
}

struct ResidualArc {
  int to;
  Rational cap;
  Rational cost;
  std::size_t edge;
  bool forward;
};

}  // namespace

std::vector<Rational> min_transit_max_flow(const DynamicNetwork& net,
                                           const Rational& horizon_length) {
  require_static(net);
  const auto idx = net.vertex_index();
  const std::size_t n = net.vertices.size();
  std::vector<ResidualArc> arcs;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    const int a = idx.at(edge.tail), b = idx.at(edge.head);
    const Rational& tau = edge.transit.first_value();
    out[static_cast<std::size_t>(a)].push_back(arcs.size());
    arcs.push_back({b, edge.capacity.first_value(), tau, e, true});
    out[static_cast<std::size_t>(b)].push_back(arcs.size());
    arcs.push_back({a, 0, -tau, e, false});
  }
  const int s = idx.at(net.source), t = idx.at(net.target);

  while (true) {
    // Bellman-Ford; costs on residual arcs admit no negative cycles because
    // every intermediate flow is of minimum cost for its value.
    std::vector<std::optional<Rational>> dist(n);
    std::vector<std::size_t> via(n, SIZE_MAX);
    dist[static_cast<std::size_t>(s)] = Rational(0);
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t u = 0; u < n; ++u) {
        if (!dist[u]) continue;
        for (std::size_t ai : out[u]) {
          const auto& a = arcs[ai];
          if (a.cap.sign() <= 0) continue;
          const Rational d = *dist[u] + a.cost;
          auto& dv = dist[static_cast<std::size_t>(a.to)];
          if (!dv || d < *dv) {
            dv = d;
            via[static_cast<std::size_t>(a.to)] = ai;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    const auto& dt = dist[static_cast<std::size_t>(t)];
    if (!dt || !(*dt < horizon_length)) break;

    Rational push;
    bool first = true;
    for (int v = t; v != s;) {
      const auto& a = arcs[via[static_cast<std::size_t>(v)]];
      if (first || a.cap < push) push = a.cap;
      first = false;
      v = arcs[via[static_cast<std::size_t>(v)] ^ 1].to;
    }
    for (int v = t; v != s;) {
      const std::size_t ai = via[static_cast<std::size_t>(v)];
      arcs[ai].cap -= push;
      arcs[ai ^ 1].cap += push;
      v = arcs[ai ^ 1].to;
    }
  }

  std::vector<Rational> flow(net.edges.size(), Rational(0));
  for (const auto& a : arcs)
    if (!a.forward) flow[a.edge] = a.cap;
  return flow;
}

PathDecomposition decompose(const DynamicNetwork& net,
                            const std::vector<Rational>& edge_flow) {
  const auto idx = net.vertex_index();
  const std::size_t n = net.vertices.size();
  std::vector<Rational> rest = edge_flow;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t e = 0; e < net.edges.size(); ++e)
    out[static_cast<std::size_t>(idx.at(net.edges[e].tail))].push_back(e);
  const int s = idx.at(net.source), t = idx.at(net.target);

  auto next_edge = [&](int v) -> std::optional<std::size_t> {
    for (std::size_t e : out[static_cast<std::size_t>(v)])
      if (rest[e].sign() > 0) return e;
    return std::nullopt;
  };

  PathDecomposition paths;
  while (auto start = next_edge(s)) {
    std::vector<std::size_t> walk{*start};
    std::vector<int> pos(n, -1);
    pos[static_cast<std::size_t>(s)] = 0;
    int v = idx.at(net.edges[*start].head);
    bool cancelled = false;
    while (v != t) {
      if (pos[static_cast<std::size_t>(v)] >= 0) {
        // cycle through v: cancel it
        const auto from = static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]);
        Rational m = rest[walk[from]];
        for (std::size_t i = from; i < walk.size(); ++i) m = min(m, rest[walk[i]]);
        for (std::size_t i = from; i < walk.size(); ++i) rest[walk[i]] -= m;
        cancelled = true;
        break;
      }
      pos[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
      const auto e = next_edge(v);
      if (!e) throw std::invalid_argument("edge flow violates conservation at " +
                                          net.vertices[static_cast<std::size_t>(v)]);
      walk.push_back(*e);
      v = idx.at(net.edges[*e].head);
    }
    if (cancelled) continue;
    PathFlow p{walk, rest[walk.front()], 0};
    for (std::size_t e : walk) {
      p.rate = min(p.rate, rest[e]);
      p.transit += net.edges[e].transit.first_value();
    }
    for (std::size_t e : walk) rest[e] -= p.rate;
    paths.push_back(std::move(p));
  }
  return paths;
}

std::vector<Rational> recompose(const DynamicNetwork& net, const PathDecomposition& paths) {
  std::vector<Rational> flow(net.edges.size(), Rational(0));
  for (const auto& p : paths)
    for (std::size_t e : p.edges) flow[e] += p.rate;
  return flow;
}

TemporallyRepeatedResult temporally_repeated(const DynamicNetwork& net) {
  require_static(net);
  if (!net.horizon.is_finite())
    throw std::invalid_argument("temporally repeated flows need a finite horizon");
  const Rational& lo = net.horizon.lo;
  const Rational length = net.horizon.length();
  TemporallyRepeatedResult r;
  r.paths = decompose(net, min_transit_max_flow(net, length));
  FlowBuilder fb(net);
  r.value = 0;
  for (const auto& p : r.paths) {
    const Rational duration = length - p.transit;
    if (duration.sign() <= 0) continue;
    r.value += p.rate * duration;
    Rational offset = 0;
    for (std::size_t e : p.edges) {
      fb.add(e, lo + offset, lo + offset + duration, p.rate);
      offset += net.edges[e].transit.first_value();
    }
  }
  r.flow = fb.build();
  return r;
}

}  // namespace dynflow
