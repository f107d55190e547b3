#include "pdim/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "pdim/errors.hpp"

namespace pdim {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  const Graph& g;
  int n, l;
  Clock::time_point deadline;
  long long node_cap;                           // 0 means unlimited
  std::vector<std::vector<std::int32_t>> code;  // per local vertex
  std::vector<std::int32_t> max_used;           // per coordinate, over assigned prefix
  long long nodes = 0;
  bool interrupted = false;

  Searcher(const Graph& gr, int len, Clock::time_point dl, long long cap)
      : g(gr), n(gr.n()), l(len), deadline(dl), node_cap(cap) {
    code.assign(n, std::vector<std::int32_t>(l, 0));
    max_used.assign(l, -1);
  }

  bool pair_ok(int i, int j, const std::vector<std::int32_t>& t) const {
    const auto& cj = code[j];
    if (g.has_edge_idx(i, j)) {
      for (int c = 0; c < l; ++c)
        if (t[c] == cj[c]) return false;
      return true;
    }
    int eq = 0;
    for (int c = 0; c < l; ++c)
      if (t[c] == cj[c]) ++eq;
    return eq >= 1 && eq < l;  // agree somewhere, stay injective
  }

  bool assign(int i) {
    if (i == n) return true;
    ++nodes;
    if (node_cap > 0 && nodes > node_cap) {
      interrupted = true;
      return false;
    }
    if ((nodes & 1023) == 0 && Clock::now() > deadline) {
      interrupted = true;
      return false;
    }
    std::vector<std::int32_t> t(l, 0);
    std::vector<std::int32_t> cap(l);
    for (int c = 0; c < l; ++c) cap[c] = std::min(max_used[c] + 1, std::int32_t(n - 1));
    // odometer over tuples <= cap, lexicographic from all-zeros
    for (;;) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = pair_ok(i, j, t);
      if (ok) {
        code[i] = t;
        std::vector<std::int32_t> saved(l);
        for (int c = 0; c < l; ++c) {
          saved[c] = max_used[c];
          max_used[c] = std::max(max_used[c], t[c]);
        }
        if (assign(i + 1)) return true;
        max_used = saved;
        if (interrupted) return false;
      }
      int c = l - 1;
      while (c >= 0 && t[c] == cap[c]) t[c--] = 0;
      if (c < 0) return false;
      ++t[c];
    }
  }
};

Encoding make_witness(const Graph& g, const std::vector<std::vector<std::int32_t>>& code, int l) {
  Encoding e(g.ids(), l);
  for (int i = 0; i < g.n(); ++i)
    for (int c = 0; c < l; ++c) e.row(i)[c] = code[i][c];
  return e;
}

}  // namespace

Encoding greedy_equivalence_encode(const Graph& g) {
  int n = g.n();
  if (n < 1) throw InvalidArgument("empty graph");
  // uncovered non-adjacent pairs, id order
  std::vector<std::pair<int, int>> uncovered;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge_idx(u, v)) uncovered.emplace_back(u, v);

  std::vector<std::vector<std::int32_t>> coords;  // per pass, symbol by local index
  while (!uncovered.empty()) {
    std::vector<int> cls(n);
    std::iota(cls.begin(), cls.end(), 0);
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < n; ++i) members[i] = {i};
    for (auto [u, v] : uncovered) {
      int cu = cls[u], cv = cls[v];
      if (cu == cv) continue;
      bool indep = true;
      for (int a : members[cu]) {
        for (int b : members[cv])
          if (g.has_edge_idx(a, b)) {
            indep = false;
            break;
          }
        if (!indep) break;
      }
      if (!indep) continue;
      for (int b : members[cv]) cls[b] = cu;
      members[cu].insert(members[cu].end(), members[cv].begin(), members[cv].end());
      members[cv].clear();
    }
    // color classes in order of smallest member
    std::vector<std::int32_t> sym(n, -1);
    std::int32_t next = 0;
    for (int i = 0; i < n; ++i)  // first touch in index order names the class
      if (sym[cls[i]] < 0) sym[cls[i]] = next++;
    std::vector<std::int32_t> col(n);
    for (int i = 0; i < n; ++i) col[i] = sym[cls[i]];
    coords.push_back(col);
    std::erase_if(uncovered, [&](auto& p) { return col[p.first] == col[p.second]; });
  }

  Encoding e(g.ids(), static_cast<int>(coords.size()) + 1);
  for (int i = 0; i < n; ++i) {
    for (size_t c = 0; c < coords.size(); ++c) e.row(i)[c] = coords[c][i];
    e.row(i)[coords.size()] = g.id_at(i);  // unique id coordinate
  }
  return e;
}

ExactResult pdim_exact(const Graph& g, SearchBudget budget) {
  int n = g.n();
  if (n < 1) throw InvalidArgument("empty graph");
  int max_dim = budget.max_dimension > 0 ? budget.max_dimension : n;
  auto deadline = Clock::now() + std::chrono::milliseconds(budget.deadline_ms);

  ExactResult res;
  Encoding greedy = greedy_equivalence_encode(g);
  res.dimension = greedy.length();
  res.witness = std::move(greedy);
  res.optimal = false;

  for (int l = 1; l < res.dimension && l <= max_dim; ++l) {
    long long cap = 0;
    if (budget.max_nodes > 0) {
      cap = budget.max_nodes - res.nodes;
      if (cap <= 0) return res;  // best known witness, non-optimal
    }
    Searcher s(g, l, deadline, cap);
    if (s.assign(0)) {
      res.dimension = l;
      res.witness = make_witness(g, s.code, l);
      res.optimal = true;
      res.nodes += s.nodes;
      return res;
    }
    res.nodes += s.nodes;
    if (s.interrupted) return res;  // best known witness, non-optimal
  }
  // every l below the greedy dimension is infeasible, so the greedy witness is
  // optimal — unless the cap stopped us early
  res.optimal = res.dimension - 1 <= max_dim;
  return res;
}

SmallEncoding encode_small(const Graph& g, SearchBudget budget) {
  ExactResult r = pdim_exact(g, budget);
  return {std::move(r.witness), r.optimal};
}

}  // namespace pdim
