#pragma once
#include <utility>
#include <vector>

namespace pdim {

// Undirected simple graph over a fixed set of global vertex ids. Subgraph
// operations preserve ids — a vertex keeps its id for its whole lifetime, so
// encodings of different pieces of the same graph can be merged by id.
// Internally vertices are addressed by local index into the sorted id list.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);                 // ids 0..n-1
  explicit Graph(std::vector<int> ids);  // arbitrary id set

  void add_edge(int u, int v);  // by id; rejects self-loops, duplicates, unknown ids

  int n() const { return static_cast<int>(ids_.size()); }
  long long m() const { return m_; }
  const std::vector<int>& ids() const { return ids_; }
  int id_at(int idx) const { return ids_[idx]; }
  bool contains(int id) const;
  int index_of(int id) const;  // throws UnknownVertex

  bool has_edge(int u, int v) const;          // by id
  bool has_edge_idx(int ui, int vi) const;    // by local index
  const std::vector<int>& adj(int idx) const { return adj_[idx]; }  // sorted local indices

  std::vector<std::pair<int, int>> edges() const;  // id pairs, u < v, lexicographic

 private:
  std::vector<int> ids_;  // sorted ascending
  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

// Components as id lists, ordered by size descending, ties by smallest id.
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep_ids);
Graph with_clique(const Graph& g, const std::vector<int>& clique_ids);

struct DegeneracyResult {
  std::vector<int> order;  // ids in removal order (repeated min residual degree)
  int k = 0;               // degeneracy: max residual degree seen at removal
};
DegeneracyResult degeneracy_ordering(const Graph& g);

// Smallest color absent among already-colored neighbors, along the given id order.
// Result indexed by local vertex index.
std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order_ids);

// Two-coloring by BFS, smallest id of each component is the root and gets 0.
// Throws OddCycle. Result indexed by local vertex index.
std::vector<int> bipartition(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace pdim
