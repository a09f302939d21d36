#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace anticonc {

/// Simple undirected graph on vertices 1..n, the sequencing constraint
/// graph. Edges are stored normalized (i < j) and deduplicated.
class ConstraintGraph {
 public:
  explicit ConstraintGraph(std::size_t n);
  ConstraintGraph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int i, int j) const;
  std::size_t max_degree() const;

  void add_edge(int i, int j);

 private:
  std::size_t n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;  // 1-based; adj_[0] unused
};

/// Edges {i,j} with |i-j| <= t: the t-weak-sequenceability constraints.
ConstraintGraph banded_graph(std::size_t n, std::size_t t);

}  // namespace anticonc
