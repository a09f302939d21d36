#include "anticonc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace anticonc {

ConstraintGraph::ConstraintGraph(std::size_t n) : n_(n), adj_(n + 1) {}

ConstraintGraph::ConstraintGraph(std::size_t n, const std::vector<std::pair<int, int>>& edges)
    : ConstraintGraph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

void ConstraintGraph::add_edge(int i, int j) {
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n_ || static_cast<std::size_t>(j) > n_)
    throw std::invalid_argument("edge endpoint outside [1, n]");
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  if (i > j) std::swap(i, j);
  if (has_edge(i, j)) return;
  edges_.emplace_back(i, j);
  adj_[static_cast<std::size_t>(i)].push_back(j);
  adj_[static_cast<std::size_t>(j)].push_back(i);
}

bool ConstraintGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(edges_.begin(), edges_.end(), std::make_pair(i, j)) != edges_.end();
}

std::size_t ConstraintGraph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v = 1; v <= n_; ++v) d = std::max(d, adj_[v].size());
  return d;
}

ConstraintGraph banded_graph(std::size_t n, std::size_t t) {
  if (t < 1 || t >= n) throw std::invalid_argument("band width must satisfy 1 <= t < n");
  ConstraintGraph g(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n && j - i <= t; ++j)
      g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

}  // namespace anticonc
