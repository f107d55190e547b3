#include "pdim/generators.hpp"

#include <algorithm>
#include <vector>

#include "pdim/errors.hpp"
#include "pdim/rng.hpp"

namespace pdim {

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("negative n");
  Graph g(n);
  SplitMix64 rng{seed};
  for (int v = 1; v < n; ++v)
    g.add_edge(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(v))), v);
  return g;
}

Graph random_forest(int n, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("negative n");
  Graph g(n);
  SplitMix64 rng{seed};
  for (int v = 1; v < n; ++v) {
    if (rng.bounded(16) == 0) continue;  // fresh root
    g.add_edge(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(v))), v);
  }
  return g;
}

Graph random_partial_ktree(int n, int k, double keep_prob, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("negative n");
  if (k < 1) throw InvalidArgument("k must be positive");
  if (keep_prob < 0.0 || keep_prob > 1.0) throw InvalidArgument("keep_prob outside [0,1]");
  SplitMix64 rng{seed};
  int base = std::min(n, k + 1);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v) edges.emplace_back(u, v);
  // k-cliques available for attachment; seeded with the k-subsets of the base
  std::vector<std::vector<int>> cliques;
  if (n > k) {
    for (int skip = 0; skip < base; ++skip) {
      std::vector<int> c;
      for (int u = 0; u < base; ++u)
        if (u != skip) c.push_back(u);
      cliques.push_back(std::move(c));
    }
  }
  for (int v = base; v < n; ++v) {
    const auto pick = cliques[static_cast<size_t>(rng.bounded(cliques.size()))];
    for (int u : pick) edges.emplace_back(u, v);
    for (size_t skip = 0; skip < pick.size(); ++skip) {
      std::vector<int> c;
      for (size_t i = 0; i < pick.size(); ++i)
        if (i != skip) c.push_back(pick[i]);
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  Graph g(n);
  for (auto [u, v] : edges)
    if (rng.unit() < keep_prob) g.add_edge(u, v);
  return g;
}

Graph random_kdegenerate(int n, int k, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("negative n");
  if (k < 1) throw InvalidArgument("k must be positive");
  SplitMix64 rng{seed};
  Graph g(n);
  int base = std::min(n, k + 1);
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v) g.add_edge(u, v);
  std::vector<int> chosen;
  for (int v = base; v < n; ++v) {
    chosen.clear();
    while (static_cast<int>(chosen.size()) < k) {
      int u = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(v)));
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
    }
    for (int u : chosen) g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("negative n");
  if (p < 0.0 || p > 1.0) throw InvalidArgument("p outside [0,1]");
  SplitMix64 rng{seed};
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

}  // namespace pdim
