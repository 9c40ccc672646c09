#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "fcsf/certify.hpp"
#include "fcsf/io.hpp"

using fcsf::Certificate;
using fcsf::ColorBudget;
using fcsf::ColorSet;
using fcsf::ColorTable;
using fcsf::EdgeColoredGraph;
using fcsf::ParsedBudget;
using fcsf::ParsedGraph;

namespace {

ParsedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return fcsf::parse_graph(in);
}

}  // namespace

TEST_CASE("graph text round-trips through write and parse") {
  const std::string text =
      "graph 4\n"
      "color red\n"
      "color blue\n"
      "edge 0 2 red\n"
      "edge 0 3 blue\n"
      "edge 1 2 red\n";
  const ParsedGraph first = parse(text);
  REQUIRE(first.graph.vertex_count() == 4);
  REQUIRE(first.graph.edge_count() == 3);
  REQUIRE(first.graph.color_count() == 2);
  REQUIRE(first.colors.name(0) == "red");
  REQUIRE(first.colors.name(1) == "blue");

  std::ostringstream out;
  fcsf::write_graph(out, first.graph, first.colors);
  const ParsedGraph second = parse(out.str());
  REQUIRE(second.graph.vertex_count() == first.graph.vertex_count());
  REQUIRE(second.graph.edge_count() == first.graph.edge_count());
  REQUIRE(second.graph.color_count() == first.graph.color_count());
  for (int e = 0; e < first.graph.edge_count(); ++e) {
    REQUIRE(second.graph.edge(e).u == first.graph.edge(e).u);
    REQUIRE(second.graph.edge(e).v == first.graph.edge(e).v);
    REQUIRE(second.graph.edge(e).color == first.graph.edge(e).color);
  }
  std::ostringstream again;
  fcsf::write_graph(again, second.graph, second.colors);
  REQUIRE(again.str() == out.str());
}

TEST_CASE("comments and blank lines are ignored") {
  const ParsedGraph parsed = parse(
      "# a square\n"
      "\n"
      "graph 3   # three vertices\n"
      "edge 0 1 a # first\n"
      "   \n"
      "edge 1 2 b\n");
  REQUIRE(parsed.graph.vertex_count() == 3);
  REQUIRE(parsed.graph.edge_count() == 2);
  REQUIRE(parsed.graph.color_count() == 2);
}

TEST_CASE("color records reserve ordinals without edges") {
  const ParsedGraph parsed = parse(
      "graph 2\n"
      "color spare\n"
      "edge 0 1 used\n"
      "color last\n");
  REQUIRE(parsed.graph.color_count() == 3);
  REQUIRE(parsed.colors.name(0) == "spare");
  REQUIRE(parsed.colors.name(1) == "used");
  REQUIRE(parsed.colors.name(2) == "last");
  REQUIRE(parsed.graph.multiplicity(0) == 0);
  REQUIRE(parsed.graph.multiplicity(1) == 1);
}

TEST_CASE("an edgeless graph still needs its header") {
  const ParsedGraph parsed = parse("graph 5\n");
  REQUIRE(parsed.graph.vertex_count() == 5);
  REQUIRE(parsed.graph.edge_count() == 0);
  REQUIRE(parsed.graph.color_count() == 0);
}

TEST_CASE("parse failures carry their line numbers") {
  REQUIRE_THROWS_WITH(parse("edge 0 1 a\n"), Catch::Matchers::ContainsSubstring("line 1"));
  REQUIRE_THROWS_WITH(parse("graph 2\ngraph 2\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THROWS_WITH(parse("graph 2\nvertex 0\n"),
                      Catch::Matchers::ContainsSubstring("unknown record 'vertex'"));
  REQUIRE_THROWS_WITH(parse("graph 2\nedge 0 x a\n"),
                      Catch::Matchers::ContainsSubstring("bad vertex id 'x'"));
  REQUIRE_THROWS_WITH(parse("graph two\n"),
                      Catch::Matchers::ContainsSubstring("bad vertex count 'two'"));
  REQUIRE_THROWS_WITH(parse("graph 2\nedge 0 1\n"),
                      Catch::Matchers::ContainsSubstring("expected 'edge <u> <v> <color-name>'"));
  REQUIRE_THROWS_AS(parse(""), fcsf::ParseError);
  REQUIRE_THROWS_WITH(parse(""), Catch::Matchers::ContainsSubstring("missing 'graph"));
}

TEST_CASE("structural edge errors surface at parse time with lines") {
  try {
    parse("graph 3\nedge 1 1 a\n");
    FAIL("expected a loop error");
  } catch (const fcsf::LoopEdgeError& e) {
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse("graph 3\nedge 0 1 a\nedge 1 0 b\n");
    FAIL("expected a duplicate error");
  } catch (const fcsf::DuplicateEdgeError& e) {
    REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse("graph 3\nedge 0 7 a\n");
    FAIL("expected a range error");
  } catch (const fcsf::VertexRangeError& e) {
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    REQUIRE(std::string(e.what()).find("outside [0, 3)") != std::string::npos);
  }
}

TEST_CASE("budget parsing against a fixed color table") {
  ColorTable colors;
  colors.intern("red");
  colors.intern("blue");
  std::istringstream in(
      "# caps\n"
      "cap blue 2\n"
      "cap red 0\n");
  const ColorBudget budget = fcsf::parse_budget(in, colors);
  REQUIRE(budget.cap(0) == 0);
  REQUIRE(budget.cap(1) == 2);
}

TEST_CASE("budget parsing rejects bad records") {
  ColorTable colors;
  colors.intern("red");
  {
    std::istringstream in("cap green 1\n");
    REQUIRE_THROWS_AS(fcsf::parse_budget(in, colors), fcsf::UnknownColorError);
  }
  {
    std::istringstream in("cap red 1\ncap red 2\n");
    REQUIRE_THROWS_AS(fcsf::parse_budget(in, colors), fcsf::ParseError);
  }
  {
    std::istringstream in("cap red -1\n");
    REQUIRE_THROWS_AS(fcsf::parse_budget(in, colors), fcsf::BudgetError);
  }
  {
    std::istringstream in("cap red many\n");
    REQUIRE_THROWS_AS(fcsf::parse_budget(in, colors), fcsf::ParseError);
  }
  {
    std::istringstream in("budget red 1\n");
    REQUIRE_THROWS_AS(fcsf::parse_budget(in, colors), fcsf::ParseError);
  }
  {
    std::istringstream in("");
    REQUIRE_THROWS_WITH(fcsf::parse_budget(in, colors),
                        Catch::Matchers::ContainsSubstring("no cap for color 'red'"));
  }
}

TEST_CASE("standalone budgets define their own color order") {
  std::istringstream in(
      "cap north 3\n"
      "cap south 1\n");
  const ParsedBudget parsed = fcsf::parse_budget(in);
  REQUIRE(parsed.colors.size() == 2);
  REQUIRE(parsed.colors.name(0) == "north");
  REQUIRE(parsed.colors.name(1) == "south");
  REQUIRE(parsed.budget.cap(0) == 3);
  REQUIRE(parsed.budget.cap(1) == 1);
  std::istringstream dup("cap a 1\ncap a 2\n");
  REQUIRE_THROWS_AS(fcsf::parse_budget(dup), fcsf::ParseError);
}

TEST_CASE("color tables intern and look up names") {
  ColorTable table = ColorTable::generated(3);
  REQUIRE(table.size() == 3);
  REQUIRE(table.name(0) == "c1");
  REQUIRE(table.name(2) == "c3");
  REQUIRE(table.find("c2") == 1);
  REQUIRE_FALSE(table.find("c9").has_value());
  REQUIRE(table.intern("c2") == 1);
  REQUIRE(table.intern("c9") == 3);
  REQUIRE(table.size() == 4);
  REQUIRE_THROWS_AS(table.name(4), fcsf::UnknownColorError);
  REQUIRE_THROWS_AS(table.name(-1), fcsf::UnknownColorError);
}

TEST_CASE("missing files raise parse errors naming the path") {
  REQUIRE_THROWS_WITH(fcsf::parse_graph_file("/nonexistent/g.graph"),
                      Catch::Matchers::ContainsSubstring("/nonexistent/g.graph"));
  ColorTable colors;
  REQUIRE_THROWS_AS(fcsf::parse_budget_file("/nonexistent/b.budget", colors),
                    fcsf::ParseError);
  REQUIRE_THROWS_AS(fcsf::parse_budget_file("/nonexistent/b.budget"), fcsf::ParseError);
}

TEST_CASE("write rejects a mismatched color table") {
  const EdgeColoredGraph g(2, {{0, 1, 0}}, 1);
  std::ostringstream out;
  REQUIRE_THROWS_AS(fcsf::write_graph(out, g, ColorTable::generated(2)),
                    fcsf::InvalidArgumentError);
}

TEST_CASE("satisfied certificates render as bare or witnessed objects") {
  const EdgeColoredGraph g(4, {{0, 2, 0}, {0, 3, 0}, {1, 2, 1}, {1, 3, 2}}, 3);
  const ColorTable colors = ColorTable::generated(3);

  Certificate bare;
  bare.verdict = fcsf::Verdict::Satisfied;
  REQUIRE(fcsf::certificate_to_json(bare, g, colors) == "{\"verdict\":\"satisfied\"}");

  const Certificate witnessed =
      fcsf::check_forest_condition(g, ColorBudget::uniform(3, 1), 1, true);
  REQUIRE(fcsf::certificate_to_json(witnessed, g, colors) ==
          "{\"verdict\":\"satisfied\",\"witness_edges\":"
          "[[0,2,\"c1\"],[1,2,\"c2\"],[1,3,\"c3\"]]}");
}

TEST_CASE("violated certificates list their arithmetic") {
  const EdgeColoredGraph g(4, {{0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}}, 1);
  const Certificate cert = fcsf::check_forest_condition(g, ColorBudget::uniform(1, 1), 1);
  ColorTable colors;
  colors.intern("ink");
  REQUIRE(fcsf::certificate_to_json(cert, g, colors) ==
          "{\"verdict\":\"violated\",\"violating_colors\":[\"ink\"],"
          "\"omega\":4,\"bound\":2}");
}

TEST_CASE("premise reports render each witness kind") {
  const ColorTable colors = ColorTable::generated(3);

  fcsf::PremiseReport holds;
  REQUIRE(fcsf::premise_report_to_json(holds, colors) == "{\"holds\":true}");

  fcsf::PremiseReport subset;
  subset.holds = false;
  subset.violating_colors = ColorSet::of({0, 2});
  subset.detail = "4*1 <= 2^2";
  REQUIRE(fcsf::premise_report_to_json(subset, colors) ==
          "{\"holds\":false,\"violating_colors\":[\"c1\",\"c3\"],"
          "\"detail\":\"4*1 <= 2^2\"}");

  fcsf::PremiseReport prefix;
  prefix.holds = false;
  prefix.violating_prefix = 4;
  REQUIRE(fcsf::premise_report_to_json(prefix, colors) ==
          "{\"holds\":false,\"violating_prefix\":4}");

  fcsf::PremiseReport color;
  color.holds = false;
  color.violating_color = 1;
  color.edge_clause_failed = false;
  REQUIRE(fcsf::premise_report_to_json(color, colors) ==
          "{\"holds\":false,\"violating_color\":\"c2\"}");

  fcsf::PremiseReport edges;
  edges.holds = false;
  edges.edge_clause_failed = true;
  REQUIRE(fcsf::premise_report_to_json(edges, colors) ==
          "{\"holds\":false,\"edge_clause_failed\":true}");
}

TEST_CASE("json strings escape quotes and control characters") {
  const EdgeColoredGraph g(2, {{0, 1, 0}}, 1);
  ColorTable colors;
  colors.intern("a\"b\\c");
  Certificate cert;
  cert.verdict = fcsf::Verdict::Violated;
  cert.violating_colors = ColorSet::of({0});
  cert.observed_components = 2;
  cert.bound = 1;
  REQUIRE(fcsf::certificate_to_json(cert, g, colors) ==
          "{\"verdict\":\"violated\",\"violating_colors\":[\"a\\\"b\\\\c\"],"
          "\"omega\":2,\"bound\":1}");

  fcsf::PremiseReport report;
  report.holds = false;
  report.detail = "tab\there\nnewline";
  REQUIRE(fcsf::premise_report_to_json(report, colors) ==
          "{\"holds\":false,\"detail\":\"tab\\there\\nnewline\"}");
}
