#include <string>
#include <vector>

#include "doctest.h"
#include "pdim/encoding.hpp"
#include "pdim/errors.hpp"
#include "pdim/generators.hpp"
#include "pdim/graph.hpp"
#include "pdim/io.hpp"
#include "pdim/treedecomp.hpp"

using namespace pdim;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

int error_line(const std::string& text, GraphFormat fmt) {
  try {
    parse_graph(text, fmt);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("edge lists parse with comments, blanks, and CRLF") {
  std::string text = "# a path\r\n\r\n3 2\r\n0 1\r\n# middle\r\n1 2\r\n";
  Graph g = parse_graph(text, GraphFormat::Edgelist);
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("dimacs is 1-indexed with 'e' lines and 'c' comments") {
  std::string text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
  Graph g = parse_graph(text, GraphFormat::Dimacs);
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("pace graphs are 1-indexed with bare edge lines") {
  std::string text = "c path\np tw 3 2\n1 2\n2 3\n";
  Graph g = parse_graph(text, GraphFormat::PaceGr);
  CHECK(g.n() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("graph parse errors carry the offending line") {
  CHECK(error_line("2 1\n0 0\n", GraphFormat::Edgelist) == 2);            // self-loop
  CHECK(error_line("2 2\n0 1\n1 0\n", GraphFormat::Edgelist) == 3);       // duplicate
  CHECK(error_line("2 1\n0 2\n", GraphFormat::Edgelist) == 2);            // out of range
  CHECK(error_line("", GraphFormat::Edgelist) == 1);                      // missing header
  CHECK(error_line("# nothing\n", GraphFormat::Edgelist) == 1);           // comments only
  CHECK(error_line("3 1\n0 1\n1 2\n", GraphFormat::Edgelist) == 3);       // too many edges
  CHECK(error_line("3 2\n0 1\n", GraphFormat::Edgelist) == 2);            // too few edges
  CHECK(error_line("3 x\n", GraphFormat::Edgelist) == 1);                 // garbage count
  CHECK(error_line("2 1\n0 1 5\n", GraphFormat::Edgelist) == 2);          // bad arity
  CHECK(error_line("p tw 3 2\n1 2\n2 3\n", GraphFormat::Dimacs) == 1);    // wrong kind
  CHECK(error_line("p edge 2 1\n1 2\ne 1 2\n", GraphFormat::Dimacs) == 2);
  CHECK(error_line("-1 0\n", GraphFormat::Edgelist) == 1);                // negative n
}

TEST_CASE("encodings serialize to canonical compact JSON") {
  Encoding e({0, 1}, 2);
  e.set(0, 1, 1);
  e.set(1, 0, 2);
  e.set(1, 1, 3);
  CHECK(encoding_to_json(e) == "{\"codes\":[[0,1],[2,3]],\"l\":2,\"n\":2}");

  Encoding back = encoding_from_json(encoding_to_json(e));
  CHECK(back == e);

  Encoding gapped({0, 2}, 1);
  CHECK_THROWS_AS(encoding_to_json(gapped), InvalidArgument);
}

TEST_CASE("encoding JSON rejects malformed documents") {
  CHECK_THROWS_AS(encoding_from_json("{"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("[]"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{}"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{\"codes\":[],\"l\":1,\"n\":\"two\"}"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{\"codes\":[],\"l\":0,\"n\":0}"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{\"codes\":[[0]],\"l\":1,\"n\":2}"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{\"codes\":[[0,1]],\"l\":1,\"n\":1}"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{\"codes\":[[0.5]],\"l\":1,\"n\":1}"), ParseError);
  CHECK_THROWS_AS(encoding_from_json("{\"codes\":[[99999999999]],\"l\":1,\"n\":1}"), ParseError);
  // the reported line tracks the newline count up to the failure
  try {
    encoding_from_json("{\n\"codes\": oops\n}");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("pace decompositions parse and round-trip") {
  Graph g = path(3);
  std::string text = "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
  TreeDecomposition td = parse_pace_td(text, g);
  CHECK(td.bags == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(td.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(validate(g, td).valid);
  CHECK(write_pace_td(td, 3) == text);

  TreeDecomposition again = parse_pace_td(write_pace_td(td, 3), g);
  CHECK(again.bags == td.bags);
  CHECK(again.edges == td.edges);
}

TEST_CASE("pace decomposition round-trip preserves a computed decomposition") {
  Graph g = random_partial_ktree(12, 2, 0.8, 1);
  TreeDecomposition td = decompose_heuristic(g);
  TreeDecomposition back = parse_pace_td(write_pace_td(td, g.n()), g);
  CHECK(validate(g, back).valid);
  CHECK(back.width() == td.width());
}

TEST_CASE("pace decomposition rejects malformed input") {
  Graph g = path(3);
  auto line_of = [&](const std::string& text, const Graph& gg) {
    try {
      parse_pace_td(text, gg);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("s td 2 2 4\nb 1 1 2\nb 2 2 3\n1 2\n", g) == 1);   // n mismatch
  CHECK(line_of("s td 2 2 3\nb 1 1 2\nb 1 2 3\n1 2\n", g) == 3);   // bag declared twice
  CHECK(line_of("s td 2 2 3\nb 0 1 2\nb 2 2 3\n1 2\n", g) == 2);   // bag index 0
  CHECK(line_of("s td 2 2 3\nb 1 1 4\nb 2 2 3\n1 2\n", g) == 2);   // vertex out of range
  CHECK(line_of("s td 2 2 3\nb 1 1 1\nb 2 2 3\n1 2\n", g) == 2);   // repeated vertex
  CHECK(line_of("s td 2 2 3\nb 1 1 2\n1 2\n", g) == 3);            // bag 2 never declared
  CHECK(line_of("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 3\n", g) == 4);   // edge index range
  CHECK(line_of("b 1 1 2\n", g) == 1);                             // missing header
}
