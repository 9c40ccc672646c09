#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fcsf/certify.hpp"
#include "fcsf/graph.hpp"
#include "fcsf/theorems.hpp"

namespace fcsf {

/// Bidirectional map between color names and dense ordinals, in first-seen
/// order. Names are arbitrary non-whitespace tokens.
class ColorTable {
 public:
  ColorTable() = default;

  /// Ordinal for the name, registering it if new.
  ColorId intern(const std::string& name) {
    const auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    const ColorId id = static_cast<ColorId>(names_.size());
    if (id >= ColorSet::max_colors)
      throw CapacityError("color sets are limited to " + std::to_string(ColorSet::max_colors) +
                          " colors");
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }

  std::optional<ColorId> find(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(ColorId c) const {
    if (c < 0 || c >= size())
      throw UnknownColorError("color ordinal " + std::to_string(c) + " has no name");
    return names_[static_cast<std::size_t>(c)];
  }

  int size() const { return static_cast<int>(names_.size()); }

  /// Table of synthetic names c1..cN.
  static ColorTable generated(int count) {
    ColorTable table;
    for (int i = 1; i <= count; ++i) table.intern("c" + std::to_string(i));
    return table;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ColorId> index_;
};

struct ParsedGraph {
  EdgeColoredGraph graph;
  ColorTable colors;
};

struct ParsedBudget {
  ColorBudget budget;
  ColorTable colors;
};

namespace detail {

inline std::string at_line(int line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

inline std::vector<std::string> tokenize_line(const std::string& raw) {
  const std::size_t hash = raw.find('#');
  std::istringstream words(hash == std::string::npos ? raw : raw.substr(0, hash));
  std::vector<std::string> tokens;
  for (std::string tok; words >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

inline long long parse_int(const std::string& token, int line, const std::string& what) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw ParseError(at_line(line, "bad " + what + " '" + token + "'"));
  return value;
}

}  // namespace detail

/// Reads the text format: a "graph <vertex_count>" header, then any mix of
/// "edge <u> <v> <color-name>" and "color <color-name>" records. '#' starts
/// a comment, blank lines are skipped, and color ordinals follow first
/// appearance. Every diagnostic names its line.
inline ParsedGraph parse_graph(std::istream& in) {
  ColorTable colors;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  int vertex_count = -1;
  int line = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line;
    const std::vector<std::string> tokens = detail::tokenize_line(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "graph") {
      if (vertex_count >= 0) throw ParseError(detail::at_line(line, "duplicate 'graph' header"));
      if (tokens.size() != 2)
        throw ParseError(detail::at_line(line, "expected 'graph <vertex_count>'"));
      const long long n = detail::parse_int(tokens[1], line, "vertex count");
      if (n < 0 || n > std::numeric_limits<VertexId>::max())
        throw ParseError(detail::at_line(line, "bad vertex count '" + tokens[1] + "'"));
      vertex_count = static_cast<int>(n);
      continue;
    }
    if (vertex_count < 0)
      throw ParseError(detail::at_line(line, "'graph <vertex_count>' header must come first"));
    if (tokens[0] == "edge") {
      if (tokens.size() != 4)
        throw ParseError(detail::at_line(line, "expected 'edge <u> <v> <color-name>'"));
      const long long u = detail::parse_int(tokens[1], line, "vertex id");
      const long long v = detail::parse_int(tokens[2], line, "vertex id");
      if (u < 0 || u >= vertex_count)
        throw VertexRangeError(detail::at_line(
            line, "edge endpoint " + tokens[1] + " outside [0, " + std::to_string(vertex_count) +
                      ")"));
      if (v < 0 || v >= vertex_count)
        throw VertexRangeError(detail::at_line(
            line, "edge endpoint " + tokens[2] + " outside [0, " + std::to_string(vertex_count) +
                      ")"));
      if (u == v)
        throw LoopEdgeError(detail::at_line(line, "loop at vertex " + tokens[1]));
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint64_t>(std::max(u, v));
      if (!seen.insert(key).second)
        throw DuplicateEdgeError(
            detail::at_line(line, "duplicate edge " + tokens[1] + "-" + tokens[2]));
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v),
                       colors.intern(tokens[3])});
      continue;
    }
    if (tokens[0] == "color") {
      if (tokens.size() != 2)
        throw ParseError(detail::at_line(line, "expected 'color <color-name>'"));
      colors.intern(tokens[1]);
      continue;
    }
    throw ParseError(detail::at_line(line, "unknown record '" + tokens[0] + "'"));
  }
  if (vertex_count < 0) throw ParseError("missing 'graph <vertex_count>' header");
  return ParsedGraph{EdgeColoredGraph(vertex_count, std::move(edges), colors.size()),
                     std::move(colors)};
}

inline ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return parse_graph(in);
}

/// Writes the graph in the same text format, declaring every color up front
/// in ordinal order so a round trip reproduces the identical graph.
inline void write_graph(std::ostream& out, const EdgeColoredGraph& g, const ColorTable& colors) {
  if (colors.size() != g.color_count())
    throw InvalidArgumentError("color table size " + std::to_string(colors.size()) +
                               " does not match the graph's " +
                               std::to_string(g.color_count()) + " colors");
  out << "graph " << g.vertex_count() << '\n';
  for (ColorId c = 0; c < g.color_count(); ++c) out << "color " << colors.name(c) << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << e.u << ' ' << e.v << ' ' << colors.name(e.color) << '\n';
}

/// Reads "cap <color-name> <non-negative integer>" lines against a fixed
/// color table; every color in the table needs exactly one cap.
inline ColorBudget parse_budget(std::istream& in, const ColorTable& colors) {
  std::vector<int> caps(static_cast<std::size_t>(colors.size()), 0);
  std::vector<char> assigned(static_cast<std::size_t>(colors.size()), 0);
  int line = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line;
    const std::vector<std::string> tokens = detail::tokenize_line(raw);
    if (tokens.empty()) continue;
    if (tokens[0] != "cap")
      throw ParseError(detail::at_line(line, "unknown record '" + tokens[0] + "'"));
    if (tokens.size() != 3)
      throw ParseError(detail::at_line(line, "expected 'cap <color-name> <value>'"));
    const auto id = colors.find(tokens[1]);
    if (!id) throw UnknownColorError(detail::at_line(line, "unknown color '" + tokens[1] + "'"));
    const long long value = detail::parse_int(tokens[2], line, "cap value");
    if (value < 0) throw BudgetError(detail::at_line(line, "negative cap for '" + tokens[1] + "'"));
    if (value > std::numeric_limits<int>::max())
      throw ParseError(detail::at_line(line, "bad cap value '" + tokens[2] + "'"));
    if (assigned[static_cast<std::size_t>(*id)])
      throw ParseError(detail::at_line(line, "duplicate cap for '" + tokens[1] + "'"));
    assigned[static_cast<std::size_t>(*id)] = 1;
    caps[static_cast<std::size_t>(*id)] = static_cast<int>(value);
  }
  for (ColorId c = 0; c < colors.size(); ++c)
    if (!assigned[static_cast<std::size_t>(c)])
      throw BudgetError("no cap for color '" + colors.name(c) + "'");
  return ColorBudget(std::move(caps));
}

/// Standalone variant where the budget file itself defines the color set,
/// in file order.
inline ParsedBudget parse_budget(std::istream& in) {
  ColorTable colors;
  std::vector<int> caps;
  int line = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line;
    const std::vector<std::string> tokens = detail::tokenize_line(raw);
    if (tokens.empty()) continue;
    if (tokens[0] != "cap")
      throw ParseError(detail::at_line(line, "unknown record '" + tokens[0] + "'"));
    if (tokens.size() != 3)
      throw ParseError(detail::at_line(line, "expected 'cap <color-name> <value>'"));
    if (colors.find(tokens[1]))
      throw ParseError(detail::at_line(line, "duplicate cap for '" + tokens[1] + "'"));
    const long long value = detail::parse_int(tokens[2], line, "cap value");
    if (value < 0) throw BudgetError(detail::at_line(line, "negative cap for '" + tokens[1] + "'"));
    if (value > std::numeric_limits<int>::max())
      throw ParseError(detail::at_line(line, "bad cap value '" + tokens[2] + "'"));
    colors.intern(tokens[1]);
    caps.push_back(static_cast<int>(value));
  }
  return ParsedBudget{ColorBudget(std::move(caps)), std::move(colors)};
}

inline ColorBudget parse_budget_file(const std::string& path, const ColorTable& colors) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return parse_budget(in, colors);
}

inline ParsedBudget parse_budget_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return parse_budget(in);
}

namespace detail {

inline std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

inline std::string json_color_list(ColorSet set, const ColorTable& colors) {
  std::string out = "[";
  bool first = true;
  set.for_each([&](ColorId c) {
    if (!first) out += ",";
    first = false;
    out += json_quote(colors.name(c));
  });
  out += "]";
  return out;
}

}  // namespace detail

/// One-object JSON rendering of a certificate; fields that do not apply to
/// the verdict are omitted.
inline std::string certificate_to_json(const Certificate& cert, const EdgeColoredGraph& g,
                                       const ColorTable& colors) {
  std::string out = "{\"verdict\":";
  if (cert.satisfied()) {
    out += "\"satisfied\"";
    if (cert.witness) {
      out += ",\"witness_edges\":[";
      bool first = true;
      for (const EdgeIndex i : cert.witness->edges) {
        const Edge& e = g.edges()[static_cast<std::size_t>(i)];
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
               detail::json_quote(colors.name(e.color)) + "]";
      }
      out += "]";
    }
  } else {
    out += "\"violated\",\"violating_colors\":" +
           detail::json_color_list(cert.violating_colors, colors) +
           ",\"omega\":" + std::to_string(cert.observed_components) +
           ",\"bound\":" + std::to_string(cert.bound);
  }
  out += "}";
  return out;
}

/// One-object JSON rendering of a premise report, mirroring the certificate
/// shape: absent witness kinds are omitted.
inline std::string premise_report_to_json(const PremiseReport& report,
                                          const ColorTable& colors) {
  std::string out = "{\"holds\":";
  out += report.holds ? "true" : "false";
  if (report.violating_colors)
    out += ",\"violating_colors\":" + detail::json_color_list(*report.violating_colors, colors);
  if (report.violating_prefix)
    out += ",\"violating_prefix\":" + std::to_string(*report.violating_prefix);
  if (report.violating_color)
    out += ",\"violating_color\":" + detail::json_quote(colors.name(*report.violating_color));
  if (report.edge_clause_failed) out += ",\"edge_clause_failed\":true";
  if (!report.detail.empty()) out += ",\"detail\":" + detail::json_quote(report.detail);
  out += "}";
  return out;
}

}  // namespace fcsf
