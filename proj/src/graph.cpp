#include "pdim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "pdim/errors.hpp"

namespace pdim {

Graph::Graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  ids_.resize(n);
  std::iota(ids_.begin(), ids_.end(), 0);
  adj_.resize(n);
}

Graph::Graph(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InvalidArgument("duplicate vertex id");
  adj_.resize(ids_.size());
}

bool Graph::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

int Graph::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw UnknownVertex("vertex id " + std::to_string(id) + " not in graph");
  return static_cast<int>(it - ids_.begin());
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  int ui = index_of(u), vi = index_of(v);
  auto& au = adj_[ui];
  auto it = std::lower_bound(au.begin(), au.end(), vi);
  if (it != au.end() && *it == vi)
    throw InvalidArgument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  au.insert(it, vi);
  auto& av = adj_[vi];
  av.insert(std::lower_bound(av.begin(), av.end(), ui), ui);
  ++m_;
}

bool Graph::has_edge_idx(int ui, int vi) const {
  const auto& a = adj_[ui].size() <= adj_[vi].size() ? adj_[ui] : adj_[vi];
  int target = adj_[ui].size() <= adj_[vi].size() ? vi : ui;
  return std::binary_search(a.begin(), a.end(), target);
}

bool Graph::has_edge(int u, int v) const { return has_edge_idx(index_of(u), index_of(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<size_t>(m_));
  for (int ui = 0; ui < n(); ++ui)
    for (int vi : adj_[ui])
      if (ui < vi) es.emplace_back(ids_[ui], ids_[vi]);
  return es;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[c].push_back(g.id_at(u));
      for (int v : g.adj(u))
        if (comp[v] < 0) {
          comp[v] = c;
          q.push(v);
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep_ids) {
  std::vector<int> keep = keep_ids;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int id : keep) (void)g.index_of(id);  // validates
  Graph h(keep);
  for (size_t i = 0; i < keep.size(); ++i) {
    int ui = g.index_of(keep[i]);
    for (int vj : g.adj(ui)) {
      int vid = g.id_at(vj);
      if (vid > keep[i] && std::binary_search(keep.begin(), keep.end(), vid))
        h.add_edge(keep[i], vid);
    }
  }
  return h;
}

Graph with_clique(const Graph& g, const std::vector<int>& clique_ids) {
  std::vector<int> c = clique_ids;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  Graph h(g.ids());
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (!h.has_edge(c[i], c[j])) h.add_edge(c[i], c[j]);
  return h;
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> bucket;  // (degree, local index); index order == id order
  for (int i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(g.adj(i).size());
    bucket.insert({deg[i], i});
  }
  std::vector<char> removed(n, 0);
  DegeneracyResult res;
  res.order.reserve(n);
  while (!bucket.empty()) {
    auto [d, u] = *bucket.begin();
    bucket.erase(bucket.begin());
    removed[u] = 1;
    res.k = std::max(res.k, d);
    res.order.push_back(g.id_at(u));
    for (int v : g.adj(u)) {
      if (removed[v]) continue;
      bucket.erase({deg[v], v});
      --deg[v];
      bucket.insert({deg[v], v});
    }
  }
  return res;
}

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order_ids) {
  int n = g.n();
  if (static_cast<int>(order_ids.size()) != n)
    throw InvalidArgument("coloring order must list every vertex exactly once");
  std::vector<int> color(n, -1);
  std::vector<char> used;
  for (int id : order_ids) {
    int u = g.index_of(id);
    if (color[u] >= 0) throw InvalidArgument("vertex repeated in coloring order");
    used.assign(g.adj(u).size() + 1, 0);
    for (int v : g.adj(u))
      if (color[v] >= 0 && color[v] < static_cast<int>(used.size())) used[color[v]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[u] = c;
  }
  return color;
}

std::vector<int> bipartition(const Graph& g) {
  int n = g.n();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {  // index order == ascending id order
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          throw OddCycle("graph contains an odd cycle");
        }
      }
    }
  }
  return color;
}

bool is_forest(const Graph& g) {
  return g.m() == g.n() - static_cast<long long>(connected_components(g).size());
}

}  // namespace pdim
