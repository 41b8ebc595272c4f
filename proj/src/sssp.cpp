#include "cfr/sssp.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace cfr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> initial_labels(const WeightedDigraph& graph,
                                   std::span<const Seed> seeds) {
  if (seeds.empty()) {
    throw std::invalid_argument("shortest paths: at least one seed required");
  }
  std::vector<double> dist(static_cast<std::size_t>(graph.vertex_count()), kInf);
  for (const Seed& s : seeds) {
    if (s.vertex < 0 || s.vertex >= graph.vertex_count()) {
      throw std::invalid_argument("shortest paths: seed vertex " +
                                  std::to_string(s.vertex) + " out of range");
    }
    if (std::isnan(s.distance)) {
      throw std::invalid_argument("shortest paths: NaN seed label");
    }
    double& d = dist[static_cast<std::size_t>(s.vertex)];
    if (s.distance < d) d = s.distance;
  }
  return dist;
}

}  // namespace

WeightedDigraph::WeightedDigraph(int vertex_count, std::vector<WeightedArc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  first_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
  for (const WeightedArc& a : arcs_) {
    if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 ||
        a.head >= vertex_count_) {
      throw std::invalid_argument("arc index out of range");
    }
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) +
                                  ") has negative or non-finite weight");
    }
    ++first_[static_cast<std::size_t>(a.tail) + 1];
  }
  for (std::size_t v = 1; v < first_.size(); ++v) first_[v] += first_[v - 1];
  out_.resize(arcs_.size());
  std::vector<std::size_t> next(first_.begin(), first_.end() - 1);
  for (const WeightedArc& a : arcs_) {
    out_[next[static_cast<std::size_t>(a.tail)]++] = {a.head, a.weight};
  }
}

std::vector<double> shortest_paths_seeded(const WeightedDigraph& graph,
                                          std::span<const Seed> seeds) {
  std::vector<double> dist = initial_labels(graph, seeds);
  using Entry = std::pair<double, int>;
  std::vector<Entry> storage;
  storage.reserve(static_cast<std::size_t>(graph.vertex_count()));
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap(
      std::greater<>{}, std::move(storage));
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (dist[static_cast<std::size_t>(v)] < kInf) {
      heap.emplace(dist[static_cast<std::size_t>(v)], v);
    }
  }
  std::vector<char> settled(static_cast<std::size_t>(graph.vertex_count()), 0);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    auto& done = settled[static_cast<std::size_t>(v)];
    if (done) continue;
    done = 1;
    for (const auto& arc : graph.out_arcs(v)) {
      const double candidate = d + arc.weight;
      double& target = dist[static_cast<std::size_t>(arc.head)];
      if (candidate < target) {
        target = candidate;
        heap.emplace(candidate, arc.head);
      }
    }
  }
  return dist;
}

std::vector<double> shortest_paths_label_correcting(const WeightedDigraph& graph,
                                                    std::span<const Seed> seeds) {
  std::vector<double> dist = initial_labels(graph, seeds);
  std::vector<char> queued(static_cast<std::size_t>(graph.vertex_count()), 0);
  std::deque<int> queue;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (dist[static_cast<std::size_t>(v)] < kInf) {
      queue.push_back(v);
      queued[static_cast<std::size_t>(v)] = 1;
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(v)] = 0;
    const double d = dist[static_cast<std::size_t>(v)];
    for (const auto& arc : graph.out_arcs(v)) {
      const double candidate = d + arc.weight;
      const auto head = static_cast<std::size_t>(arc.head);
      if (candidate < dist[head]) {
        dist[head] = candidate;
        if (!queued[head]) {
          queued[head] = 1;
          queue.push_back(arc.head);
        }
      }
    }
  }
  return dist;
}

}  // namespace cfr
