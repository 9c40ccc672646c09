#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fcsf/color_set.hpp"
#include "fcsf/errors.hpp"

namespace fcsf {

using VertexId = std::int32_t;
using EdgeIndex = std::int32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  ColorId color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n)
      : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  /// Joins the sets of a and b; returns false if they were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --sets_;
    return true;
  }

  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

/// Component id per vertex (dense, first-seen order) plus the component count.
struct ComponentDecomposition {
  std::vector<int> component_of;
  int count = 0;
};

/// Per-color caps covering a dense color set [0, size). The same type serves
/// as the cap mapping f and as a graph's realized multiplicity profile g.
class ColorBudget {
 public:
  ColorBudget() = default;

  explicit ColorBudget(std::vector<int> caps) : caps_(std::move(caps)) {
    for (int c : caps_)
      if (c < 0) throw BudgetError("negative color cap");
  }

  static ColorBudget uniform(int color_count, int cap) {
    if (color_count < 0) throw BudgetError("negative color count");
    if (cap < 0) throw BudgetError("negative color cap");
    return ColorBudget(std::vector<int>(static_cast<std::size_t>(color_count), cap));
  }

  int size() const { return static_cast<int>(caps_.size()); }

  int cap(ColorId c) const {
    if (c < 0 || c >= size())
      throw UnknownColorError("budget has no cap for color ordinal " + std::to_string(c));
    return caps_[static_cast<std::size_t>(c)];
  }

  const std::vector<int>& caps() const { return caps_; }

  long long total() const {
    long long s = 0;
    for (int c : caps_) s += c;
    return s;
  }

  long long sum_over(ColorSet colors) const {
    long long s = 0;
    colors.for_each([&](ColorId c) { s += cap(c); });
    return s;
  }

 private:
  std::vector<int> caps_;
};

/// A finite simple graph with one color per edge, drawn from a dense color
/// set [0, color_count) that may include colors used by no edge. Immutable
/// after construction and safe to share across threads.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph(int vertex_count, std::vector<Edge> edges, int color_count)
      : vertex_count_(vertex_count),
        color_count_(color_count),
        edges_(std::move(edges)),
        multiplicity_(static_cast<std::size_t>(std::max(color_count, 0)), 0) {
    if (vertex_count_ < 0) throw InvalidArgumentError("negative vertex count");
    if (color_count_ < 0) throw InvalidArgumentError("negative color count");
    if (color_count_ > ColorSet::max_colors)
      throw CapacityError("color sets are limited to " +
                          std::to_string(ColorSet::max_colors) + " colors");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
        throw VertexRangeError("edge endpoint " +
                               std::to_string(e.u < 0 || e.u >= vertex_count_ ? e.u : e.v) +
                               " outside [0, " + std::to_string(vertex_count_) + ")");
      if (e.u == e.v)
        throw LoopEdgeError("loop at vertex " + std::to_string(e.u));
      if (e.color < 0 || e.color >= color_count_)
        throw UnknownColorError("edge color ordinal " + std::to_string(e.color) +
                                " not in the color set");
      const auto a = static_cast<std::uint64_t>(std::min(e.u, e.v));
      const auto b = static_cast<std::uint64_t>(std::max(e.u, e.v));
      if (!seen.insert((a << 32) | b).second)
        throw DuplicateEdgeError("duplicate edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v));
      ++multiplicity_[static_cast<std::size_t>(e.color)];
    }
  }

  int vertex_count() const { return vertex_count_; }
  int color_count() const { return color_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeIndex i) const {
    if (i < 0 || i >= edge_count())
      throw EdgeRangeError("edge ordinal " + std::to_string(i) + " not in the graph");
    return edges_[static_cast<std::size_t>(i)];
  }

  ColorSet all_colors() const { return ColorSet::first(color_count_); }

  /// |E_c|: the number of edges carrying color c.
  int multiplicity(ColorId c) const {
    if (c < 0 || c >= color_count_)
      throw UnknownColorError("color ordinal " + std::to_string(c) +
                              " not in the color set");
    return multiplicity_[static_cast<std::size_t>(c)];
  }

  const std::vector<int>& multiplicities() const { return multiplicity_; }

  /// E_R: indices of the edges whose color lies in R.
  std::vector<EdgeIndex> edges_with_colors(ColorSet r) const {
    require_subset_of_colors(r);
    std::vector<EdgeIndex> out;
    for (EdgeIndex i = 0; i < edge_count(); ++i)
      if (r.contains(edges_[static_cast<std::size_t>(i)].color)) out.push_back(i);
    return out;
  }

  /// The graph (V, E \ E_R): same vertices and color set, edges of the
  /// colors in R removed.
  EdgeColoredGraph remove_colors(ColorSet r) const {
    require_subset_of_colors(r);
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_)
      if (!r.contains(e.color)) kept.push_back(e);
    return EdgeColoredGraph(vertex_count_, std::move(kept), color_count_);
  }

  ComponentDecomposition components() const {
    DisjointSets dsu(vertex_count_);
    for (const Edge& e : edges_) dsu.unite(e.u, e.v);
    ComponentDecomposition deco;
    deco.component_of.assign(static_cast<std::size_t>(vertex_count_), -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(vertex_count_), -1);
    for (int v = 0; v < vertex_count_; ++v) {
      const int root = dsu.find(v);
      if (id_of_root[static_cast<std::size_t>(root)] < 0)
        id_of_root[static_cast<std::size_t>(root)] = deco.count++;
      deco.component_of[static_cast<std::size_t>(v)] = id_of_root[static_cast<std::size_t>(root)];
    }
    return deco;
  }

  /// ω(G - E_R) without materializing the subgraph.
  int component_count_without_colors(ColorSet removed) const {
    require_subset_of_colors(removed);
    DisjointSets dsu(vertex_count_);
    for (const Edge& e : edges_)
      if (!removed.contains(e.color)) dsu.unite(e.u, e.v);
    return dsu.set_count();
  }

  bool is_connected() const {
    return component_count_without_colors(ColorSet{}) == 1;
  }

 private:
  void require_subset_of_colors(ColorSet r) const {
    if (!r.subset_of(all_colors()))
      throw UnknownColorError("color subset contains ordinals outside the color set");
  }

  int vertex_count_;
  int color_count_;
  std::vector<Edge> edges_;
  std::vector<int> multiplicity_;
};

/// An acyclic edge subset of some parent graph, covering all of its
/// vertices; with k edges it has vertex_count - k components. Stored as
/// ascending edge ordinals into the parent graph's edge list.
struct SpanningForest {
  std::vector<EdgeIndex> edges;

  int size() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const SpanningForest&, const SpanningForest&) = default;
};

/// Throws BudgetError unless f covers exactly the graph's color set.
inline void require_budget_for(const EdgeColoredGraph& g, const ColorBudget& f) {
  if (f.size() != g.color_count())
    throw BudgetError("budget covers " + std::to_string(f.size()) +
                      " colors but the graph has " + std::to_string(g.color_count()));
}

/// Whether every color's multiplicity is within its cap.
inline bool is_f_chromatic(const EdgeColoredGraph& g, const ColorBudget& f) {
  require_budget_for(g, f);
  for (ColorId c = 0; c < g.color_count(); ++c)
    if (g.multiplicity(c) > f.cap(c)) return false;
  return true;
}

/// True iff F is acyclic, has exactly vertex_count - w edges, and uses every
/// color at most its cap. Edge ordinals outside the graph are an error, not
/// a false verdict.
inline bool validate_spanning_forest(const EdgeColoredGraph& g, const SpanningForest& forest,
                                     const ColorBudget& f, int w) {
  require_budget_for(g, f);
  std::vector<EdgeIndex> sorted = forest.edges;
  std::ranges::sort(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.edge_count())
      throw EdgeRangeError("forest edge ordinal " + std::to_string(sorted[i]) +
                           " not in the graph");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw EdgeRangeError("forest repeats edge ordinal " + std::to_string(sorted[i]));
  }
  if (forest.size() != g.vertex_count() - w) return false;
  DisjointSets dsu(g.vertex_count());
  std::vector<int> usage(static_cast<std::size_t>(g.color_count()), 0);
  for (EdgeIndex i : sorted) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if (!dsu.unite(e.u, e.v)) return false;
    if (++usage[static_cast<std::size_t>(e.color)] > f.cap(e.color)) return false;
  }
  return true;
}

}  // namespace fcsf
