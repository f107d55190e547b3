#include "pdim/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "pdim/errors.hpp"

namespace pdim {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  for (auto& s : out)
    if (!s.empty() && s.back() == '\r') s.pop_back();
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> t;
  std::istringstream ss(line);
  std::string w;
  while (ss >> w) t.push_back(w);
  return t;
}

long long to_int(const std::string& tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + tok + "'", line);
  return v;
}

int end_line(const std::vector<std::string>& lines) {
  return lines.empty() ? 1 : static_cast<int>(lines.size());
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat fmt) {
  auto lines = split_lines(text);
  bool header_seen = false;
  long long n = 0, m = 0, seen = 0;
  Graph g(0);
  for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
    auto t = tokens_of(lines[ln - 1]);
    if (t.empty()) continue;
    if (fmt == GraphFormat::Edgelist ? t[0][0] == '#' : t[0] == "c") continue;
    if (!header_seen) {
      if (fmt == GraphFormat::Edgelist) {
        if (t.size() != 2) throw ParseError("expected header 'n m'", ln);
        n = to_int(t[0], ln);
        m = to_int(t[1], ln);
      } else {
        const char* kind = fmt == GraphFormat::Dimacs ? "edge" : "tw";
        if (t.size() != 4 || t[0] != "p" || t[1] != kind)
          throw ParseError(std::string("expected header 'p ") + kind + " n m'", ln);
        n = to_int(t[2], ln);
        m = to_int(t[3], ln);
      }
      if (n < 0 || n > 100'000'000) throw ParseError("vertex count out of range", ln);
      if (m < 0) throw ParseError("negative edge count", ln);
      g = Graph(static_cast<int>(n));
      header_seen = true;
      continue;
    }
    if (fmt == GraphFormat::Dimacs) {
      if (t.size() != 3 || t[0] != "e") throw ParseError("expected edge line 'e u v'", ln);
      t.erase(t.begin());
    } else if (t.size() != 2) {
      throw ParseError("expected edge line 'u v'", ln);
    }
    long long base = fmt == GraphFormat::Edgelist ? 0 : 1;
    long long u = to_int(t[0], ln) - base;
    long long v = to_int(t[1], ln) - base;
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex out of range", ln);
    if (seen == m) throw ParseError("more edge lines than the header's m", ln);
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const Error& err) {
      throw ParseError(err.what(), ln);  // self-loop or duplicate
    }
    ++seen;
  }
  if (!header_seen) throw ParseError("missing header", end_line(lines));
  if (seen != m)
    throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(seen),
                     end_line(lines));
  return g;
}

std::string encoding_to_json(const Encoding& e) {
  for (int i = 0; i < e.n(); ++i)
    if (e.id_at(i) != i)
      throw InvalidArgument("encoding JSON requires vertex ids 0..n-1");
  nlohmann::json j;
  j["n"] = e.n();
  j["l"] = e.length();
  auto& codes = j["codes"] = nlohmann::json::array();
  for (int i = 0; i < e.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < e.length(); ++c) row.push_back(e.get(i, c));
    codes.push_back(std::move(row));
  }
  return j.dump();
}

Encoding encoding_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    size_t upto = std::min(text.size(), err.byte);
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(err.what(), line);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("l") || !j.contains("codes"))
    throw ParseError("expected object with keys codes, l, n", 1);
  if (!j["n"].is_number_integer() || !j["l"].is_number_integer() || !j["codes"].is_array())
    throw ParseError("bad types for codes/l/n", 1);
  long long n = j["n"].get<long long>();
  long long l = j["l"].get<long long>();
  if (n < 0 || n > 100'000'000) throw ParseError("n out of range", 1);
  if (l < 1 || l > 1'000'000) throw ParseError("l out of range", 1);
  if (static_cast<long long>(j["codes"].size()) != n)
    throw ParseError("codes must hold n rows", 1);
  std::vector<int> ids(n);
  for (long long i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
  Encoding e(ids, static_cast<int>(l));
  for (long long i = 0; i < n; ++i) {
    const auto& row = j["codes"][i];
    if (!row.is_array() || static_cast<long long>(row.size()) != l)
      throw ParseError("row " + std::to_string(i) + " must hold l symbols", 1);
    for (long long c = 0; c < l; ++c) {
      const auto& cell = row[c];
      if (!cell.is_number_integer()) throw ParseError("non-integer symbol", 1);
      long long s = cell.get<long long>();
      if (s < std::numeric_limits<std::int32_t>::min() ||
          s > std::numeric_limits<std::int32_t>::max())
        throw ParseError("symbol out of int32 range", 1);
      e.set(static_cast<int>(i), static_cast<int>(c), static_cast<std::int32_t>(s));
    }
  }
  return e;
}

TreeDecomposition parse_pace_td(const std::string& text, const Graph& g) {
  auto lines = split_lines(text);
  bool header_seen = false;
  long long nb = 0, nv = 0;
  std::vector<std::vector<int>> bags;
  std::vector<char> declared;
  std::vector<std::pair<int, int>> edges;
  for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
    auto t = tokens_of(lines[ln - 1]);
    if (t.empty() || t[0] == "c") continue;
    if (!header_seen) {
      if (t.size() != 5 || t[0] != "s" || t[1] != "td")
        throw ParseError("expected header 's td <bags> <width+1> <n>'", ln);
      nb = to_int(t[2], ln);
      to_int(t[3], ln);  // declared width+1; never trusted, validated later
      nv = to_int(t[4], ln);
      if (nb < 0 || nb > 100'000'000) throw ParseError("bag count out of range", ln);
      if (nv != g.n())
        throw ParseError("decomposition is for " + std::to_string(nv) +
                             " vertices, graph has " + std::to_string(g.n()),
                         ln);
      bags.assign(nb, {});
      declared.assign(nb, 0);
      header_seen = true;
      continue;
    }
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError("bag line needs an index", ln);
      long long bi = to_int(t[1], ln);
      if (bi < 1 || bi > nb) throw ParseError("bag index out of range", ln);
      if (declared[bi - 1]) throw ParseError("bag declared twice", ln);
      declared[bi - 1] = 1;
      std::vector<int>& bag = bags[bi - 1];
      for (size_t i = 2; i < t.size(); ++i) {
        long long v = to_int(t[i], ln);
        if (v < 1 || v > nv) throw ParseError("vertex out of range", ln);
        bag.push_back(static_cast<int>(v - 1));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw ParseError("vertex repeated in bag", ln);
      continue;
    }
    if (t.size() != 2) throw ParseError("expected tree edge '<i> <j>'", ln);
    long long a = to_int(t[0], ln), b = to_int(t[1], ln);
    if (a < 1 || a > nb || b < 1 || b > nb) throw ParseError("bag index out of range", ln);
    edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!header_seen) throw ParseError("missing 's td' header", end_line(lines));
  for (long long i = 0; i < nb; ++i)
    if (!declared[i])
      throw ParseError("bag " + std::to_string(i + 1) + " never declared", end_line(lines));
  TreeDecomposition td;
  td.bags = std::move(bags);
  td.edges = std::move(edges);
  return td;
}

std::string write_pace_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

}  // namespace pdim
