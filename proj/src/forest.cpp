#include "pdim/forest.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "pdim/errors.hpp"

namespace pdim {

namespace {

// components of t minus vertex vi, as sorted id lists, size desc / min id asc
std::vector<std::vector<int>> components_without(const Graph& t, int vi) {
  int n = t.n();
  std::vector<char> seen(n, 0);
  seen[vi] = 1;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comps.back().push_back(t.id_at(u));
      for (int w : t.adj(u))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return comps;
}

}  // namespace

SplitResult find_split_vertex(const Graph& t, double eps) {
  if (!is_forest(t)) throw NotAForest("split vertex requires a forest");
  if (eps < 0) throw InvalidArgument("eps must be >= 0");
  int n = t.n();
  if (n < 1) throw InvalidArgument("empty forest");

  // Largest component of T \ {v} for every v in O(n): root each tree, use
  // subtree sizes; the pieces at v are its child subtrees, the rest of its
  // own tree, and every other tree whole.
  std::vector<int> parent(n, -1), root(n, -1), sub(n, 1), tree_size(n, 0), order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    if (root[s] >= 0) continue;
    // iterative DFS
    std::vector<int> stack{s};
    root[s] = s;
    parent[s] = -1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int w : t.adj(u))
        if (root[w] < 0) {
          root[w] = s;
          parent[w] = u;
          stack.push_back(w);
        }
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    int u = order[i];
    if (parent[u] >= 0) sub[parent[u]] += sub[u];
  }
  for (int u = 0; u < n; ++u)
    if (root[u] == u) tree_size[u] = sub[u];
  // two largest tree sizes, to get "largest other tree" per vertex
  int big1 = 0, big2 = 0, big1_root = -1;
  for (int u = 0; u < n; ++u)
    if (root[u] == u) {
      if (tree_size[u] > big1) {
        big2 = big1;
        big1 = tree_size[u];
        big1_root = u;
      } else if (tree_size[u] > big2) {
        big2 = tree_size[u];
      }
    }

  int best = -1, best_c1 = n + 1;
  for (int v = 0; v < n; ++v) {
    int c1 = 0;
    int below = 0;
    for (int w : t.adj(v))
      if (parent[w] == v) {
        below += sub[w];
        c1 = std::max(c1, sub[w]);
      }
    c1 = std::max(c1, tree_size[root[v]] - 1 - below);      // rest of own tree
    c1 = std::max(c1, root[v] == big1_root ? big2 : big1);  // largest other tree
    if (c1 < best_c1) {
      best_c1 = c1;
      best = v;
    }
  }

  SplitResult res;
  res.v = t.id_at(best);
  res.epsilon = eps;
  auto comps = components_without(t, best);
  double cap = (0.5 - eps) * n;

  if (best_c1 > cap) {
    // dominant component against everything else
    std::vector<int> rest;
    for (size_t i = 1; i < comps.size(); ++i)
      rest.insert(rest.end(), comps[i].begin(), comps[i].end());
    std::sort(rest.begin(), rest.end());
    res.kind = SplitKind::Two;
    res.parts = {comps[0], rest};
    return res;
  }

  // first-fit decreasing under the cap
  std::vector<std::vector<int>> bins;
  std::vector<size_t> bin_size;
  for (auto& c : comps) {
    bool placed = false;
    for (size_t b = 0; b < bins.size() && !placed; ++b)
      if (double(bin_size[b] + c.size()) <= cap) {
        bins[b].insert(bins[b].end(), c.begin(), c.end());
        bin_size[b] += c.size();
        placed = true;
      }
    if (!placed) {
      bins.push_back(c);
      bin_size.push_back(c.size());
    }
  }

  if (bins.size() > 3) {
    // merge the two smallest bins; first-fit guarantees their union exceeds the
    // cap, pigeonhole keeps it <= n/2, so {merged, rest} is a valid 2-split
    std::vector<size_t> idx(bins.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      if (bin_size[a] != bin_size[b]) return bin_size[a] < bin_size[b];
      return bins[a].front() < bins[b].front();
    });
    std::vector<int> merged = bins[idx[0]];
    merged.insert(merged.end(), bins[idx[1]].begin(), bins[idx[1]].end());
    std::sort(merged.begin(), merged.end());
    std::vector<int> rest;
    for (size_t i = 2; i < idx.size(); ++i)
      rest.insert(rest.end(), bins[idx[i]].begin(), bins[idx[i]].end());
    std::sort(rest.begin(), rest.end());
    res.kind = SplitKind::Two;
    res.parts = {merged, rest};
    res.merged = true;
    return res;
  }

  for (auto& b : bins) std::sort(b.begin(), b.end());
  if (bins.size() <= 2) {
    while (bins.size() < 2) bins.emplace_back();
    res.kind = SplitKind::Two;
  } else {
    res.kind = SplitKind::Three;
  }
  res.parts = std::move(bins);
  return res;
}

Encoding base_case_encode(const Graph& t) {
  int n = t.n();
  if (n < 1 || n > 3) throw InvalidArgument("base case covers 1..3 vertices");
  if (!is_forest(t)) throw NotAForest("base case requires a forest");
  Encoding e(t.ids(), 3);
  auto put = [&](int idx, std::int32_t a, std::int32_t b) {
    e.row(idx)[0] = a;
    e.row(idx)[1] = b;
    e.row(idx)[2] = t.id_at(idx);
  };
  long long m = t.m();
  if (m == 0) {  // isolated vertices
    for (int i = 0; i < n; ++i) put(i, 0, 0);
  } else if (n == 2) {  // single edge, smaller id first
    put(0, 0, 0);
    put(1, 1, 1);
  } else if (m == 1) {  // edge plus isolated vertex
    int iso = -1;
    for (int i = 0; i < n; ++i)
      if (t.adj(i).empty()) iso = i;
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i)
      if (i != iso) (a < 0 ? a : b) = i;
    put(a, 0, 0);
    put(b, 1, 1);
    put(iso, 0, 1);
  } else {  // path, middle gets (1,1)
    int mid = -1;
    for (int i = 0; i < n; ++i)
      if (t.adj(i).size() == 2) mid = i;
    for (int i = 0; i < n; ++i)
      if (i != mid) put(i, 0, 0);
    put(mid, 1, 1);
  }
  return e;
}

namespace {

int ceil_log2(int k) {
  int b = 0;
  while ((1 << b) < k) ++b;
  return b;
}

}  // namespace

Encoding amalgamate_bipartite(const std::vector<Encoding>& pieces, int g_id) {
  int k = static_cast<int>(pieces.size());
  if (k < 1) throw InvalidArgument("no pieces");
  for (auto& p : pieces)
    if (!p.contains(g_id))
      throw SharedVertexMissing("piece lacks shared vertex " + std::to_string(g_id));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> inter;
      std::set_intersection(pieces[i].ids().begin(), pieces[i].ids().end(),
                            pieces[j].ids().begin(), pieces[j].ids().end(),
                            std::back_inserter(inter));
      if (inter != std::vector<int>{g_id})
        throw IntersectionNotSingleton("pieces must pairwise share exactly the glue vertex");
    }
  for (auto& p : pieces)
    for (int i = 0; i < p.n(); ++i)
      if (p.row(i)[0] < 0 || p.row(i)[0] > 1)
        throw PieceNotWellBegun("piece first coordinate must be a 2-coloring");

  if (k == 1) return pieces[0];

  int big = 0;
  for (auto& p : pieces) big = std::max(big, p.length());
  int suffix = ceil_log2(k);

  std::vector<int> all_ids;
  for (auto& p : pieces) all_ids.insert(all_ids.end(), p.ids().begin(), p.ids().end());
  std::sort(all_ids.begin(), all_ids.end());
  all_ids.erase(std::unique(all_ids.begin(), all_ids.end()), all_ids.end());

  Encoding out(all_ids, big + suffix);
  for (int i = 0; i < k; ++i) {
    Encoding p = pad_encoding(pieces[i], big);
    for (int c = 0; c < big; ++c) {  // transposition makes g all-zeros
      std::int32_t s = p.get(g_id, c);
      if (s != 0) p = rename_coordinate(p, c, {{s, 0}, {0, s}});
    }
    for (int vi = 0; vi < p.n(); ++vi) {
      int id = p.id_at(vi);
      if (id == g_id) continue;
      std::int32_t* dst = out.row(out.index_of(id));
      std::copy(p.row(vi), p.row(vi) + big, dst);
      bool flip = p.row(vi)[0] == 1;  // complemented branch word on the 1 side
      for (int b = 0; b < suffix; ++b) {
        int bit = (i >> (suffix - 1 - b)) & 1;
        dst[big + b] = flip ? 1 - bit : bit;
      }
    }
  }
  std::int32_t* grow = out.row(out.index_of(g_id));
  std::fill(grow, grow + big, 0);
  std::fill(grow + big, grow + big + suffix, 2);
  return out;
}

Encoding encode_forest(const Graph& t, double eps) {
  if (!is_forest(t)) throw NotAForest("encode_forest requires a forest");
  if (eps < 0 || eps >= 0.25)
    throw InvalidArgument("eps must lie in [0, 0.25) for the recursion to shrink");
  if (t.n() < 1) throw InvalidArgument("empty forest");
  if (t.n() <= 3) return base_case_encode(t);

  SplitResult sp = find_split_vertex(t, eps);
  std::vector<Encoding> pieces;
  for (auto& part : sp.parts) {
    if (part.empty()) continue;
    std::vector<int> ids = part;
    ids.push_back(sp.v);
    pieces.push_back(encode_forest(induced_subgraph(t, ids), eps));
  }
  return amalgamate_bipartite(pieces, sp.v);
}

}  // namespace pdim
