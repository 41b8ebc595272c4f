#pragma once

#include <span>
#include <vector>

namespace cfr {

struct WeightedArc {
  int tail = 0;
  int head = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

/// Directed graph with nonnegative arc weights, stored as an arc list plus a
/// forward-star index for traversal.
class WeightedDigraph {
 public:
  struct OutArc {
    int head;
    double weight;
  };

  /// Throws std::invalid_argument on an out-of-range index or a negative or
  /// non-finite weight.
  WeightedDigraph(int vertex_count, std::vector<WeightedArc> arcs);

  int vertex_count() const { return vertex_count_; }
  std::span<const WeightedArc> arcs() const { return arcs_; }
  std::span<const OutArc> out_arcs(int v) const {
    return {out_.data() + first_[v], out_.data() + first_[v + 1]};
  }

 private:
  int vertex_count_;
  std::vector<WeightedArc> arcs_;
  std::vector<std::size_t> first_;
  std::vector<OutArc> out_;
};

/// Initial label of a vertex. Labels may be negative; unseeded vertices start
/// at +infinity.
struct Seed {
  int vertex = 0;
  double distance = 0.0;
};

using SeedLabels = std::vector<Seed>;

/// dist[v] = min over seeds s and paths s ~> v of (label(s) + path weight);
/// +infinity when v is unreachable from every seed. Dijkstra with a binary
/// heap keyed on (distance, vertex), so equal keys pop lowest vertex first.
/// Throws std::invalid_argument when `seeds` is empty or out of range.
std::vector<double> shortest_paths_seeded(const WeightedDigraph& graph,
                                          std::span<const Seed> seeds);

/// Same contract, computed by FIFO label correcting (Bellman-Ford-Moore).
/// Kept as an independent cross-check of shortest_paths_seeded.
std::vector<double> shortest_paths_label_correcting(const WeightedDigraph& graph,
                                                    std::span<const Seed> seeds);

}  // namespace cfr
