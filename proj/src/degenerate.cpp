#include "pdim/degenerate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdim/errors.hpp"
#include "pdim/kernels.hpp"

namespace pdim {

std::vector<int> constrained_random_coloring(const Graph& g, const std::vector<int>& order,
                                             int palette, SplitMix64& rng) {
  int n = g.n();
  if (static_cast<int>(order.size()) != n)
    throw BadOrder("order must list every vertex exactly once");
  if (palette < 1) throw InvalidArgument("palette must be positive");
  std::vector<int> color(n, -1);
  std::vector<char> banned(palette);
  std::vector<int> allowed;
  for (int id : order) {
    int v = g.index_of(id);
    if (color[v] >= 0) throw BadOrder("vertex repeated in order");
    std::fill(banned.begin(), banned.end(), 0);
    for (int u : g.adj(v))
      if (color[u] >= 0) banned[color[u]] = 1;
    allowed.clear();
    for (int c = 0; c < palette; ++c)
      if (!banned[c]) allowed.push_back(c);
    if (allowed.empty())
      throw PaletteTooSmall("no free color for vertex " + std::to_string(id));
    color[v] = allowed[static_cast<size_t>(rng.bounded(allowed.size()))];
  }
  return color;
}

DegenerateResult encode_degenerate(const Graph& g, const DegenerateParams& params) {
  int n = g.n();
  DegenerateResult res;
  if (n <= 1) {
    res.enc = Encoding(g.ids(), 1);
    return res;
  }
  if (g.m() == 0) {
    // one constant coloring plus the index coordinate
    res.enc = Encoding(g.ids(), 2);
    for (int i = 0; i < n; ++i) res.enc.row(i)[1] = i;
    res.p = 1;
    return res;
  }

  DegeneracyResult deg = degeneracy_ordering(g);
  if (params.k != 0 && params.k < deg.k)
    throw InvalidArgument("requested k " + std::to_string(params.k) +
                          " is below the graph's degeneracy " + std::to_string(deg.k));
  int k = params.k != 0 ? params.k : deg.k;
  // color along the reverse removal order so each vertex sees <= k colored neighbors
  std::vector<int> order(deg.order.rbegin(), deg.order.rend());
  int palette = 3 * k;
  if (params.multiplier < 1) throw InvalidArgument("multiplier must be at least 1");
  int p = params.multiplier *
          static_cast<int>(std::ceil(8.317 * k * std::log2(static_cast<double>(n))));
  if (p < 1) p = 1;

  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    SplitMix64 root{params.seed + static_cast<std::uint64_t>(attempt)};
    kernels::CodeMatrix mat(n, p + 1);
    std::vector<std::int32_t> rowbuf(p + 1);
    std::vector<std::vector<int>> cols(p);
    for (int j = 0; j < p; ++j) {
      SplitMix64 stream = root.split(static_cast<std::uint64_t>(j));
      cols[j] = constrained_random_coloring(g, order, palette, stream);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < p; ++j) rowbuf[j] = cols[j][i];
      rowbuf[p] = i;  // unique index; never the agreeing coordinate
      mat.fill_row(i, rowbuf.data());
    }
    // every non-adjacent pair must share a color in some coloring
    bool covered = true;
    for (int u = 0; u < n && covered; ++u) {
      const auto& adj = g.adj(u);
      size_t a = 0;
      for (int v = u + 1; v < n; ++v) {
        while (a < adj.size() && adj[a] < v) ++a;
        if (a < adj.size() && adj[a] == v) continue;
        if (kernels::first_agreement(mat, u, v) < 0) {
          covered = false;
          break;
        }
      }
    }
    if (!covered) continue;

    res.enc = Encoding(g.ids(), p + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < p; ++j) res.enc.row(i)[j] = cols[j][i];
      res.enc.row(i)[p] = i;
    }
    res.k = k;
    res.p = p;
    res.retries = attempt;
    if (!verify_encoding(g, res.enc).valid)
      throw PropertyViolation("degenerate encoding failed verification");
    return res;
  }
  throw RetriesExhausted("no covering batch within " + std::to_string(params.max_retries) +
                         " attempts");
}

}  // namespace pdim
