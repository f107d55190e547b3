#include "pdim/tw_encoder.hpp"

#include <algorithm>
#include <string>

#include "pdim/errors.hpp"
#include "pdim/exact.hpp"

namespace pdim {

Encoding amalgamate_general(const GeneralAmalgamationPlan& plan) {
  size_t r = plan.pieces.size();
  if (r < 1 || r > 3) throw InvalidArgument("need between one and three pieces");
  if (plan.piece_codes.size() != r) throw InvalidArgument("piece and encoding counts differ");
  const std::vector<int>& s = plan.s_graph.ids();
  auto in_s = [&](int id) { return std::binary_search(s.begin(), s.end(), id); };

  for (const Graph& p : plan.pieces)
    for (int v : s)
      if (!p.contains(v))
        throw SharedVertexMissing("piece lacks shared vertex " + std::to_string(v));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) {
      std::vector<int> inter;
      const auto& a = plan.pieces[i].ids();
      const auto& b = plan.pieces[j].ids();
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (inter != s)
        throw InvalidArgument("pieces must pairwise intersect exactly in the shared set");
    }
  for (const Graph& p : plan.pieces)
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a + 1; b < s.size(); ++b)
        if (!p.has_edge(s[a], s[b]))
          throw InvalidArgument("shared set must be filled to a clique in every piece");

  for (size_t i = 0; i < r; ++i)
    if (!verify_encoding(plan.pieces[i], plan.piece_codes[i]).valid)
      throw InvalidPieceEncoding("piece " + std::to_string(i) + " has an invalid encoding");
  if (!verify_encoding(plan.s_graph, plan.s_code).valid)
    throw InvalidPieceEncoding("shared-set encoding is invalid");

  if (plan.num_colors < 1) throw InvalidArgument("need at least one color");
  for (const Graph& p : plan.pieces) {
    for (int id : p.ids()) {
      if (in_s(id)) continue;
      auto it = plan.coloring.find(id);
      if (it == plan.coloring.end() || it->second < 0 || it->second >= plan.num_colors)
        throw InvalidArgument("vertex " + std::to_string(id) + " lacks a color in range");
    }
    for (auto [u, v] : p.edges())
      if (!in_s(u) && !in_s(v) && plan.coloring.at(u) == plan.coloring.at(v))
        throw InvalidArgument("coloring is not proper off the shared set");
  }
  if (plan.triple.order != choose_ols_order(plan.num_colors))
    throw InvalidArgument("triple-clique order must be choose_ols_order(num_colors)");

  // union vertex set; the bijection f is the index into it
  std::vector<int> uids;
  for (const Graph& p : plan.pieces) uids.insert(uids.end(), p.ids().begin(), p.ids().end());
  std::sort(uids.begin(), uids.end());
  uids.erase(std::unique(uids.begin(), uids.end()), uids.end());
  auto f_of = [&](int id) {
    return static_cast<std::int32_t>(
        std::lower_bound(uids.begin(), uids.end(), id) - uids.begin());
  };

  int big = 0;
  for (const Encoding& e : plan.piece_codes) big = std::max(big, e.length());
  std::map<int, std::int32_t> targets;
  for (int v : s) targets[v] = f_of(v);
  std::vector<Encoding> aligned;
  aligned.reserve(r);
  for (const Encoding& e : plan.piece_codes)
    aligned.push_back(align_on_subset(pad_encoding(e, big), targets));
  for (const Encoding& e : aligned)
    for (int v : s) {
      int idx = e.index_of(v);
      for (int c = 0; c < big; ++c)
        if (e.row(idx)[c] != targets[v])
          throw PiecesDisagreeOnS("shared vertex " + std::to_string(v) +
                                  " is not constant after alignment");
    }

  int m = plan.triple.order;
  int m_pad = std::max(m, plan.s_code.length());
  Encoding spad = pad_encoding(plan.s_code, m_pad);
  const std::int32_t s_offset = m;  // triple-clique symbols live in [0, m)

  Encoding out(uids, big + m_pad);
  for (size_t i = 0; i < r; ++i) {
    const Graph& p = plan.pieces[i];
    for (int idx = 0; idx < p.n(); ++idx) {
      int id = p.id_at(idx);
      if (in_s(id)) continue;
      std::int32_t* row = out.row(out.index_of(id));
      const std::int32_t* pre = aligned[i].row(aligned[i].index_of(id));
      std::copy(pre, pre + big, row);
      const std::int32_t* kr = plan.triple.row(static_cast<int>(i), plan.coloring.at(id));
      for (int c = 0; c < m_pad; ++c) row[big + c] = kr[std::min(c, m - 1)];
    }
  }
  for (int v : s) {
    std::int32_t* row = out.row(out.index_of(v));
    const std::int32_t* pre = aligned[0].row(aligned[0].index_of(v));
    std::copy(pre, pre + big, row);
    const std::int32_t* sr = spad.row(spad.index_of(v));
    for (int c = 0; c < m_pad; ++c) row[big + c] = sr[c] + s_offset;
  }

  // union graph: piece edges touching a vertex off S, plus S's own edges
  Graph u(uids);
  for (const Graph& p : plan.pieces)
    for (auto [a, b] : p.edges())
      if (!in_s(a) || !in_s(b)) u.add_edge(a, b);
  for (auto [a, b] : plan.s_graph.edges()) u.add_edge(a, b);
  if (!verify_encoding(u, out).valid)
    throw PropertyViolation("amalgamated encoding failed verification");
  return out;
}

namespace {

Encoding constant_plus_index(const std::vector<int>& ids) {
  // (0, index): pairs agree first, differ second — the edgeless encoding
  Encoding e(ids, 2);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) e.row(i)[1] = i;
  return e;
}

struct TwEncoder {
  int t;  // width of the top-level decomposition
  bool certified = true;

  SmallEncoding base(const Graph& g) {
    SearchBudget budget;
    budget.deadline_ms = 60000;
    budget.max_nodes = 2000000;  // deterministic; tiny graphs finish far below
    return encode_small(g, budget);
  }

  Encoding run(const Graph& g, const TreeDecomposition& ntd) {
    if (g.n() <= t + 3) {
      SmallEncoding se = base(g);
      certified = certified && se.exact;
      return se.enc;
    }
    BagSplit split = find_split_bag(g, ntd);
    const std::vector<int>& s = split.bag;

    GeneralAmalgamationPlan plan;
    plan.s_graph = induced_subgraph(g, s);

    std::vector<std::vector<int>> parts;
    for (auto& part : split.parts)
      if (!part.empty()) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3)
      throw PropertyViolation("split must leave two or three parts");

    for (const auto& part : parts) {
      std::vector<int> ids;
      std::merge(part.begin(), part.end(), s.begin(), s.end(), std::back_inserter(ids));
      Graph piece = with_clique(induced_subgraph(g, ids), s);
      TreeDecomposition sub = normalize(piece, restrict_decomposition(g, ntd, ids));
      plan.piece_codes.push_back(run(piece, sub));
      plan.pieces.push_back(std::move(piece));
    }

    std::vector<int> rest_ids;
    for (const auto& part : parts) rest_ids.insert(rest_ids.end(), part.begin(), part.end());
    Graph rest = induced_subgraph(g, rest_ids);
    // reverse removal order: each vertex then has <= degeneracy colored neighbors
    DegeneracyResult dg = degeneracy_ordering(rest);
    std::vector<int> back(dg.order.rbegin(), dg.order.rend());
    std::vector<int> col = greedy_coloring(rest, back);
    for (int i = 0; i < rest.n(); ++i) {
      plan.coloring[rest.id_at(i)] = col[i];
      plan.num_colors = std::max(plan.num_colors, col[i] + 1);
    }
    int m = choose_ols_order(plan.num_colors);
    plan.triple = encode_triple_clique(m, construct_mols(m));

    SmallEncoding se = base(plan.s_graph);
    certified = certified && se.exact;
    plan.s_code = std::move(se.enc);

    return amalgamate_general(plan);
  }
};

}  // namespace

TwResult encode_treewidth(const Graph& g, const TreeDecomposition* td) {
  TwResult res;
  if (g.n() == 0) {
    res.enc = Encoding({}, 1);
    return res;
  }
  if (g.n() == 1) {
    res.enc = Encoding(g.ids(), 1);
    return res;
  }
  if (g.m() == 0) {
    res.enc = constant_plus_index(g.ids());
    return res;
  }

  TreeDecomposition chosen;
  if (td != nullptr) {
    TdReport rep = validate(g, *td);
    if (!rep.valid)
      throw InvalidDecomposition("supplied decomposition is invalid: " + rep.problems.front());
    chosen = *td;
  } else if (g.n() <= 25) {
    chosen = decompose_exact(g);
  } else {
    chosen = decompose_heuristic(g);
  }
  res.width_used = chosen.width();

  TreeDecomposition ntd = normalize(g, chosen);
  TwEncoder enc{res.width_used};
  res.enc = enc.run(g, ntd);
  res.bound_certified = enc.certified;

  if (!verify_encoding(g, res.enc).valid)
    throw PropertyViolation("treewidth encoding failed verification");
  return res;
}

}  // namespace pdim
