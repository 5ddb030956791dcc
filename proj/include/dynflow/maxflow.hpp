#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace dynflow {

/// Blocking-flow (Dinic) max-flow over any exact ordered scalar: int64 for
/// scaled integer capacities, Rational otherwise. Arc 2i is the forward arc
/// of add_arc's i-th call, 2i+1 its reverse.
template <typename Scalar>
class Dinic {
 public:
  explicit Dinic(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  int add_arc(int from, int to, Scalar capacity) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    res_.push_back(capacity);
    cap_.push_back(capacity);
    to_.push_back(from);
    res_.push_back(Scalar(0));
    cap_.push_back(Scalar(0));
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id / 2;
  }

  Scalar run(int source, int sink) {
    Scalar total(0);
    if (source == sink) return total;
    while (build_levels(source, sink)) total += blocking_flow(source, sink);
    return total;
  }

  /// Flow on the i-th added arc.
  Scalar flow(int arc) const {
    const auto a = static_cast<std::size_t>(2 * arc);
    return cap_[a] - res_[a];
  }

 private:
  bool build_levels(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::deque<int> queue{source};
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a : adj_[static_cast<std::size_t>(u)]) {
        const int v = to_[static_cast<std::size_t>(a)];
        if (level_[static_cast<std::size_t>(v)] < 0 &&
            res_[static_cast<std::size_t>(a)] > Scalar(0)) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  Scalar blocking_flow(int source, int sink) {
    next_.assign(adj_.size(), 0);
    Scalar pushed(0);
    std::vector<int> path;
    int u = source;
    for (;;) {
      if (u == sink) {
        Scalar bottleneck = res_[static_cast<std::size_t>(path.front())];
        for (int a : path)
          bottleneck = std::min(bottleneck, res_[static_cast<std::size_t>(a)]);
        for (int a : path) {
          res_[static_cast<std::size_t>(a)] -= bottleneck;
          res_[static_cast<std::size_t>(a ^ 1)] += bottleneck;
        }
        pushed += bottleneck;
        std::size_t k = 0;
        while (res_[static_cast<std::size_t>(path[k])] > Scalar(0)) ++k;
        u = to_[static_cast<std::size_t>(path[k] ^ 1)];
        path.resize(k);
        continue;
      }
      auto& it = next_[static_cast<std::size_t>(u)];
      const auto& out = adj_[static_cast<std::size_t>(u)];
      while (it < out.size()) {
        const int a = out[it];
        const int v = to_[static_cast<std::size_t>(a)];
        if (res_[static_cast<std::size_t>(a)] > Scalar(0) &&
            level_[static_cast<std::size_t>(v)] == level_[static_cast<std::size_t>(u)] + 1)
          break;
        ++it;
      }
      if (it < out.size()) {
        path.push_back(out[it]);
        u = to_[static_cast<std::size_t>(out[it])];
        continue;
      }
      if (u == source) return pushed;
      level_[static_cast<std::size_t>(u)] = -1;
      const int a = path.back();
      path.pop_back();
      u = to_[static_cast<std::size_t>(a ^ 1)];
      ++next_[static_cast<std::size_t>(u)];
    }
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Scalar> res_;
  std::vector<Scalar> cap_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

/// FIFO push-relabel with gap relabeling. Computes the value of a maximum
/// preflow, which equals the maximum flow value.
template <typename Scalar>
class PushRelabel {
 public:
  explicit PushRelabel(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, Scalar capacity) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    res_.push_back(capacity);
    to_.push_back(from);
    res_.push_back(Scalar(0));
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
  }

  Scalar run(int source, int sink) {
    const int n = static_cast<int>(adj_.size());
    if (source == sink) return Scalar(0);
    height_.assign(adj_.size(), 0);
    excess_.assign(adj_.size(), Scalar(0));
    count_.assign(2 * adj_.size() + 2, 0);
    global_relabel(source, sink);
    for (int v = 0; v < n; ++v) ++count_[static_cast<std::size_t>(height_[static_cast<std::size_t>(v)])];

    std::deque<int> active;
    for (int a : adj_[static_cast<std::size_t>(source)]) {
      const Scalar c = res_[static_cast<std::size_t>(a)];
      if (!(c > Scalar(0))) continue;
      const int v = to_[static_cast<std::size_t>(a)];
      res_[static_cast<std::size_t>(a)] -= c;
      res_[static_cast<std::size_t>(a ^ 1)] += c;
      excess_[static_cast<std::size_t>(v)] += c;
      if (v != sink && v != source) active.push_back(v);
    }
    std::vector<char> queued(adj_.size(), 0);
    for (int v : active) queued[static_cast<std::size_t>(v)] = 1;

    while (!active.empty()) {
      const int u = active.front();
      active.pop_front();
      queued[static_cast<std::size_t>(u)] = 0;
      auto& h = height_[static_cast<std::size_t>(u)];
      while (excess_[static_cast<std::size_t>(u)] > Scalar(0) && h < n) {
        int min_h = 2 * n;
        for (int a : adj_[static_cast<std::size_t>(u)]) {
          if (!(excess_[static_cast<std::size_t>(u)] > Scalar(0))) break;
          if (!(res_[static_cast<std::size_t>(a)] > Scalar(0))) continue;
          const int v = to_[static_cast<std::size_t>(a)];
          const int hv = height_[static_cast<std::size_t>(v)];
          if (hv + 1 == h) {
            const Scalar d = std::min(excess_[static_cast<std::size_t>(u)],
                                      res_[static_cast<std::size_t>(a)]);
            res_[static_cast<std::size_t>(a)] -= d;
            res_[static_cast<std::size_t>(a ^ 1)] += d;
            excess_[static_cast<std::size_t>(u)] -= d;
            excess_[static_cast<std::size_t>(v)] += d;
            if (v != source && v != sink && !queued[static_cast<std::size_t>(v)]) {
              queued[static_cast<std::size_t>(v)] = 1;
              active.push_back(v);
            }
          } else if (hv < min_h) {
            min_h = hv;
          }
        }
        if (!(excess_[static_cast<std::size_t>(u)] > Scalar(0))) break;
        // relabel
        const int old = h;
        --count_[static_cast<std::size_t>(old)];
        h = std::min(min_h + 1, 2 * n);
        ++count_[static_cast<std::size_t>(h)];
        if (count_[static_cast<std::size_t>(old)] == 0 && old < n) gap(old, n);
      }
    }
    return excess_[static_cast<std::size_t>(sink)];
  }

 private:
  void global_relabel(int source, int sink) {
    const int n = static_cast<int>(adj_.size());
    std::fill(height_.begin(), height_.end(), n);
    std::deque<int> queue{sink};
    height_[static_cast<std::size_t>(sink)] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int a : adj_[static_cast<std::size_t>(v)]) {
        const int u = to_[static_cast<std::size_t>(a)];
        if (height_[static_cast<std::size_t>(u)] == n && u != source &&
            res_[static_cast<std::size_t>(a ^ 1)] > Scalar(0)) {
          height_[static_cast<std::size_t>(u)] = height_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }
    height_[static_cast<std::size_t>(source)] = n;
  }

  void gap(int level, int n) {
    for (std::size_t v = 0; v < height_.size(); ++v) {
      auto& h = height_[v];
      if (h > level && h < n) {
        --count_[static_cast<std::size_t>(h)];
        h = n + 1;
        ++count_[static_cast<std::size_t>(h)];
      }
    }
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Scalar> res_;
  std::vector<int> height_;
  std::vector<Scalar> excess_;
  std::vector<int> count_;
};

}  // namespace dynflow
