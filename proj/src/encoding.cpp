#include "pdim/encoding.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <set>
#include <string>

#include "pdim/errors.hpp"
#include "pdim/kernels.hpp"

namespace pdim {

Encoding::Encoding(std::vector<int> ids, int length) : ids_(std::move(ids)), len_(length) {
  if (length < 1) throw InvalidArgument("encoding length must be >= 1");
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InvalidArgument("duplicate id in encoding domain");
  codes_.assign(ids_.size() * static_cast<size_t>(len_), 0);
}

bool Encoding::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

int Encoding::index_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw UnknownVertex("vertex id " + std::to_string(id) + " not in encoding");
  return static_cast<int>(it - ids_.begin());
}

std::int32_t Encoding::max_symbol() const {
  std::int32_t m = -1;
  for (std::int32_t s : codes_) m = std::max(m, s);
  return m;
}

namespace {

void record(VerifyReport& rep, std::size_t cap, Violation v) {
  rep.valid = false;
  ++rep.violation_count;
  if (rep.violations.size() < cap) rep.violations.push_back(v);
}

}  // namespace

VerifyReport verify_encoding(const Graph& g, const Encoding& e, std::size_t cap) {
  if (g.ids() != e.ids()) throw DomainMismatch("encoding domain differs from graph vertex set");
  VerifyReport rep;
  int n = g.n(), l = e.length();
  if (n == 0) return rep;

  kernels::CodeMatrix mat(n, l);
  for (int i = 0; i < n; ++i) mat.fill_row(i, e.row(i));

  // injectivity: sort rows, equal neighbors form violation groups
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto cmp_rows = [&](int a, int b) {
    return std::lexicographical_compare(e.row(a), e.row(a) + l, e.row(b), e.row(b) + l);
  };
  auto rows_equal = [&](int a, int b) {
    return std::memcmp(e.row(a), e.row(b), sizeof(std::int32_t) * static_cast<size_t>(l)) == 0;
  };
  std::sort(order.begin(), order.end(), cmp_rows);
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && rows_equal(order[i], order[j])) ++j;
    for (int a = i; a < j; ++a)
      for (int b = a + 1; b < j; ++b) {
        int u = g.id_at(order[a]), v = g.id_at(order[b]);
        record(rep, cap, {ViolationKind::NotInjective, std::min(u, v), std::max(u, v), -1});
      }
    i = j;
  }

  // pair scan: edges must disagree everywhere, non-edges must agree somewhere
  for (int ui = 0; ui < n; ++ui) {
    const auto& nb = g.adj(ui);
    size_t ptr = std::lower_bound(nb.begin(), nb.end(), ui + 1) - nb.begin();
    for (int vi = ui + 1; vi < n; ++vi) {
      bool edge = ptr < nb.size() && nb[ptr] == vi;
      if (edge) ++ptr;
      ++rep.pairs_scanned;
      int agree = kernels::first_agreement(mat, ui, vi);
      if (edge && agree >= 0)
        record(rep, cap, {ViolationKind::EdgeAgrees, g.id_at(ui), g.id_at(vi), agree});
      else if (!edge && agree < 0)
        record(rep, cap,
               {ViolationKind::NonEdgeDisagreesEverywhere, g.id_at(ui), g.id_at(vi), -1});
    }
  }
  return rep;
}

Encoding pad_encoding(const Encoding& e, int q) {
  if (q < e.length()) throw InvalidArgument("pad target shorter than encoding");
  Encoding out(e.ids(), q);
  int l = e.length();
  for (int i = 0; i < e.n(); ++i) {
    const std::int32_t* src = e.row(i);
    std::int32_t* dst = out.row(i);
    std::copy(src, src + l, dst);
    std::fill(dst + l, dst + q, src[l - 1]);
  }
  return out;
}

Encoding rename_coordinate(const Encoding& e, int coord,
                           const std::map<std::int32_t, std::int32_t>& mapping) {
  if (coord < 0 || coord >= e.length()) throw InvalidArgument("coordinate out of range");
  std::set<std::int32_t> occurring;
  for (int i = 0; i < e.n(); ++i) occurring.insert(e.row(i)[coord]);
  auto apply = [&](std::int32_t s) {
    auto it = mapping.find(s);
    return it == mapping.end() ? s : it->second;
  };
  std::set<std::int32_t> images;
  for (std::int32_t s : occurring) images.insert(apply(s));
  if (images.size() != occurring.size())
    throw NonInjectiveMapping("rename collapses symbols in coordinate " + std::to_string(coord));
  Encoding out = e;
  for (int i = 0; i < out.n(); ++i) out.row(i)[coord] = apply(out.row(i)[coord]);
  return out;
}

Encoding align_on_subset(const Encoding& e, const std::map<int, std::int32_t>& targets) {
  if (targets.empty()) return e;
  std::int32_t max_presc = 0;
  for (auto& [id, val] : targets) {
    (void)e.index_of(id);
    if (val < 0) throw InvalidArgument("prescribed symbols must be non-negative");
    max_presc = std::max(max_presc, val);
  }
  std::int32_t offset = static_cast<std::int32_t>(e.n()) + max_presc;
  Encoding out = e;
  for (int c = 0; c < e.length(); ++c) {
    std::map<std::int32_t, std::int32_t> m;
    for (auto& [id, val] : targets) {
      std::int32_t s = e.get(id, c);
      if (m.count(s))
        throw TargetsClashInCoordinate("two targets share symbol " + std::to_string(s) +
                                       " in coordinate " + std::to_string(c));
      m[s] = val;
    }
    for (int i = 0; i < e.n(); ++i) {
      std::int32_t s = e.row(i)[c];
      if (!m.count(s)) m[s] = s + offset;
    }
    out = rename_coordinate(out, c, m);
  }
  return out;
}

bool is_well_begun(const Graph& g, const Encoding& e, int chi) {
  if (g.ids() != e.ids()) throw DomainMismatch("encoding domain differs from graph vertex set");
  for (int i = 0; i < e.n(); ++i) {
    std::int32_t s = e.row(i)[0];
    if (s < 0 || s >= chi) return false;
  }
  return true;
}

}  // namespace pdim
