#include "pdim/latin.hpp"

#include <string>

#include "pdim/errors.hpp"

namespace pdim {

bool is_latin(const LatinSquare& s) {
  int m = s.order;
  if (static_cast<int>(s.cells.size()) != m * m) return false;
  std::vector<char> seen(m);
  for (int i = 0; i < m; ++i) {
    seen.assign(m, 0);
    for (int j = 0; j < m; ++j) {
      int v = s.at(i, j);
      if (v < 0 || v >= m || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int j = 0; j < m; ++j) {
    seen.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      int v = s.at(i, j);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  int m = a.order;
  if (b.order != m) return false;
  std::vector<char> seen(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = a.at(i, j) * m + b.at(i, j);
      if (seen[p]) return false;
      seen[p] = 1;
    }
  return true;
}

bool rows_meet(const LatinSquare& a, const LatinSquare& b) {
  int m = a.order;
  if (b.order != m) return false;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      bool met = false;
      for (int s = 0; s < m && !met; ++s) met = a.at(i, s) == b.at(k, s);
      if (!met) return false;
    }
  return true;
}

void check_mols(const MolsPair& p) {
  if (!is_latin(p.a) || !is_latin(p.b))
    throw PropertyViolation("square of order " + std::to_string(p.order) + " is not Latin");
  if (!are_orthogonal(p.a, p.b))
    throw PropertyViolation("squares of order " + std::to_string(p.order) + " are not orthogonal");
  if (!rows_meet(p.a, p.b))
    throw PropertyViolation("squares of order " + std::to_string(p.order) +
                            " lack the row-meeting property");
}

MolsPair mols_odd(int m) {
  if (m < 3 || m % 2 == 0) throw BadOrder("odd construction needs odd m >= 3");
  MolsPair p{m, {m, std::vector<int>(m * m)}, {m, std::vector<int>(m * m)}};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      p.a.at(i, j) = (i + j) % m;
      p.b.at(i, j) = (i + 2 * j) % m;
    }
  check_mols(p);
  return p;
}

namespace {

// GF(2)[x] trial division; poly and divisor as bitmasks
bool divides_gf2(unsigned div, unsigned poly) {
  int db = 32 - __builtin_clz(div);
  while (poly && 32 - __builtin_clz(poly) >= db) poly ^= div << (32 - __builtin_clz(poly) - db);
  return poly == 0;
}

unsigned smallest_irreducible(int a) {
  for (unsigned p = 1u << a; p < (2u << a); ++p) {
    bool irred = true;
    for (unsigned d = 2; d < (1u << a) && irred; ++d)
      if (divides_gf2(d, p)) irred = false;
    if (irred) return p;
  }
  throw PropertyViolation("no irreducible polynomial found");  // unreachable
}

unsigned gf_mul(unsigned x, unsigned y, int a, unsigned poly) {
  unsigned r = 0;
  while (y) {
    if (y & 1) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x >> a & 1) x ^= poly;
  }
  return r;
}

}  // namespace

MolsPair mols_power_of_two(int m) {
  int a = 0;
  while ((1 << a) < m) ++a;
  if (m < 4 || (1 << a) != m) throw BadOrder("power-of-two construction needs m = 2^a >= 4");
  unsigned poly = smallest_irreducible(a);
  const unsigned g = 2;  // the field element x: smallest unit other than 1
  MolsPair p{m, {m, std::vector<int>(m * m)}, {m, std::vector<int>(m * m)}};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      p.a.at(i, j) = i ^ j;
      p.b.at(i, j) = static_cast<int>(i ^ gf_mul(g, static_cast<unsigned>(j), a, poly));
    }
  check_mols(p);
  return p;
}

MolsPair mols_product(const MolsPair& p, const MolsPair& q) {
  int m1 = p.order, m2 = q.order, m = m1 * m2;
  MolsPair r{m, {m, std::vector<int>(static_cast<size_t>(m) * m)},
             {m, std::vector<int>(static_cast<size_t>(m) * m)}};
  for (int i1 = 0; i1 < m1; ++i1)
    for (int i2 = 0; i2 < m2; ++i2)
      for (int j1 = 0; j1 < m1; ++j1)
        for (int j2 = 0; j2 < m2; ++j2) {
          int i = i1 * m2 + i2, j = j1 * m2 + j2;
          r.a.at(i, j) = m2 * p.a.at(i1, j1) + q.a.at(i2, j2);
          r.b.at(i, j) = m2 * p.b.at(i1, j1) + q.b.at(i2, j2);
        }
  check_mols(r);
  return r;
}

MolsPair construct_mols(int m) {
  if (m >= 3 && m % 2 == 1) return mols_odd(m);
  if (m >= 4 && m % 4 == 0) {
    int u = m, a = 0;
    while (u % 2 == 0) {
      u /= 2;
      ++a;
    }
    MolsPair pw = mols_power_of_two(1 << a);
    return u == 1 ? pw : mols_product(pw, mols_odd(u));
  }
  throw BadOrder("no construction for order " + std::to_string(m) +
                 " (need odd >= 3 or divisible by 4)");
}

int choose_ols_order(int c) {
  if (c < 1) throw InvalidArgument("need at least one color");
  int m = std::max(c, 3);
  if (m % 2 == 1 || m % 4 == 0) return m;
  return m + 1;  // m = 2 mod 4 becomes odd
}

TripleCliqueCode encode_triple_clique(int t, const MolsPair& via) {
  if (via.order != t) throw InvalidArgument("pair order must equal the clique size");
  check_mols(via);
  TripleCliqueCode code;
  code.order = t;
  code.codes.assign(static_cast<size_t>(3) * t * t, 0);
  auto row = [&](int copy, int j) {
    return code.codes.data() + (static_cast<size_t>(copy) * t + j) * t;
  };
  for (int j = 0; j < t; ++j)
    for (int s = 0; s < t; ++s) {
      row(0, j)[s] = j;
      row(1, j)[s] = via.a.at(j, s);
      row(2, j)[s] = via.b.at(j, s);
    }
  // the three defining properties, checked outright
  for (int c1 = 0; c1 < 3; ++c1)
    for (int j1 = 0; j1 < t; ++j1)
      for (int c2 = c1; c2 < 3; ++c2)
        for (int j2 = (c1 == c2 ? j1 + 1 : 0); j2 < t; ++j2) {
          int agree = 0;
          bool equal = true;
          for (int s = 0; s < t; ++s) {
            if (row(c1, j1)[s] == row(c2, j2)[s]) ++agree;
            else equal = false;
          }
          if (equal) throw PropertyViolation("triple clique codes not distinct");
          if (c1 == c2 && agree > 0)
            throw PropertyViolation("same-copy rows must disagree everywhere");
          if (c1 != c2 && agree == 0)
            throw PropertyViolation("cross-copy rows must agree somewhere");
        }
  return code;
}

Graph triple_clique_graph(int t) {
  Graph g(3 * t);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) g.add_edge(c * t + i, c * t + j);
  return g;
}

Encoding triple_clique_encoding(const TripleCliqueCode& c) {
  int t = c.order;
  Encoding e(triple_clique_graph(t).ids(), t);
  for (int copy = 0; copy < 3; ++copy)
    for (int j = 0; j < t; ++j) {
      std::int32_t* dst = e.row(copy * t + j);
      const std::int32_t* src = c.row(copy, j);
      std::copy(src, src + t, dst);
    }
  return e;
}

}  // namespace pdim
