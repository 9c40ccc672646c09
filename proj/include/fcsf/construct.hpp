#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "fcsf/graph.hpp"

namespace fcsf {

/// Working state of the augmenting-path search for a maximum edge set that is
/// simultaneously a forest and within the per-color caps. The two views kept
/// in sync are the membership flags and the per-color usage counts; edges
/// whose color has a zero cap are dropped from the ground set up front since
/// they can never be selected.
///
/// Holds a reference to the graph, which must outlive the state; the budget
/// is copied.
class IntersectionState {
 public:
  IntersectionState(const EdgeColoredGraph& g, const ColorBudget& f) : g_(&g), f_(f) {
    require_budget_for(g, f);
    in_set_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    usage_.assign(static_cast<std::size_t>(g.color_count()), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      if (f.cap(g.edges()[static_cast<std::size_t>(e)].color) > 0) ground_.push_back(e);
  }

  int size() const { return size_; }
  bool contains(EdgeIndex e) const { return in_set_[static_cast<std::size_t>(e)] != 0; }
  int usage(ColorId c) const {
    if (c < 0 || c >= g_->color_count()) throw UnknownColorError("color ordinal out of range");
    return usage_[static_cast<std::size_t>(c)];
  }

  /// Selected edges in ascending ordinal order.
  std::vector<EdgeIndex> edges() const {
    std::vector<EdgeIndex> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (EdgeIndex e = 0; e < g_->edge_count(); ++e)
      if (in_set_[static_cast<std::size_t>(e)]) out.push_back(e);
    return out;
  }

  /// Attempts to grow the selection by exactly one edge. Returns false when
  /// the selection is already maximum.
  ///
  /// Exchange-graph search: nodes are ground edges. A node y outside the
  /// selection is a "source" when adding y keeps the selection acyclic and a
  /// "sink" when y's color still has spare cap. Arcs run from a selected x to
  /// an unselected y when swapping x for y keeps a forest (x lies on the tree
  /// path between y's endpoints), and from an unselected y to a selected x
  /// when the swap respects the caps (same color as y, when y's color is
  /// full). Augmenting along a shortest source-to-sink path — among those,
  /// the lexicographically least ordinal sequence — grows the selection by
  /// one; no such path means the selection is maximum. Arcs into sources and
  /// out of sinks are never used by such a path and are omitted.
  bool augment() {
    const auto& edges = g_->edges();
    const int edge_count = g_->edge_count();

    // Connectivity of, and adjacency within, the current selection.
    DisjointSets dsu(g_->vertex_count());
    std::vector<std::vector<std::pair<VertexId, EdgeIndex>>> adj(
        static_cast<std::size_t>(g_->vertex_count()));
    for (EdgeIndex e = 0; e < edge_count; ++e)
      if (in_set_[static_cast<std::size_t>(e)]) {
        const Edge& x = edges[static_cast<std::size_t>(e)];
        dsu.unite(x.u, x.v);
        adj[static_cast<std::size_t>(x.u)].emplace_back(x.v, e);
        adj[static_cast<std::size_t>(x.v)].emplace_back(x.u, e);
      }

    constexpr int unreached = -1;
    std::vector<int> dist(static_cast<std::size_t>(edge_count), unreached);
    std::vector<char> is_source(static_cast<std::size_t>(edge_count), 0);
    std::vector<std::vector<EdgeIndex>> succ(static_cast<std::size_t>(edge_count));
    std::vector<std::vector<EdgeIndex>> pred(static_cast<std::size_t>(edge_count));
    std::queue<EdgeIndex> frontier;

    std::vector<EdgeIndex> path_edges;
    path_edges.reserve(static_cast<std::size_t>(g_->vertex_count()));
    std::vector<EdgeIndex> via(static_cast<std::size_t>(g_->vertex_count()));
    std::vector<VertexId> parent(static_cast<std::size_t>(g_->vertex_count()));
    std::vector<char> seen(static_cast<std::size_t>(g_->vertex_count()));

    // Selection edges on the tree path between the endpoints of e, found by a
    // depth-first walk of e's component of the selection forest.
    auto tree_path = [&](const Edge& e) {
      path_edges.clear();
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<VertexId> stack{e.u};
      seen[static_cast<std::size_t>(e.u)] = 1;
      parent[static_cast<std::size_t>(e.u)] = e.u;
      while (!stack.empty()) {
        const VertexId at = stack.back();
        stack.pop_back();
        if (at == e.v) break;
        for (const auto& [next, via_edge] : adj[static_cast<std::size_t>(at)])
          if (!seen[static_cast<std::size_t>(next)]) {
            seen[static_cast<std::size_t>(next)] = 1;
            parent[static_cast<std::size_t>(next)] = at;
            via[static_cast<std::size_t>(next)] = via_edge;
            stack.push_back(next);
          }
      }
      for (VertexId at = e.v; at != e.u; at = parent[static_cast<std::size_t>(at)])
        path_edges.push_back(via[static_cast<std::size_t>(at)]);
    };

    for (const EdgeIndex y : ground_) {
      if (in_set_[static_cast<std::size_t>(y)]) continue;
      const Edge& e = edges[static_cast<std::size_t>(y)];
      const bool source = dsu.find(e.u) != dsu.find(e.v);
      const bool sink = usage_[static_cast<std::size_t>(e.color)] < f_.cap(e.color);
      is_source[static_cast<std::size_t>(y)] = source ? 1 : 0;
      if (sink) {
        dist[static_cast<std::size_t>(y)] = 0;
        frontier.push(y);
      } else {
        for (const EdgeIndex x : ground_)
          if (in_set_[static_cast<std::size_t>(x)] &&
              edges[static_cast<std::size_t>(x)].color == e.color) {
            succ[static_cast<std::size_t>(y)].push_back(x);
            pred[static_cast<std::size_t>(x)].push_back(y);
          }
      }
      if (!source) {
        tree_path(e);
        for (const EdgeIndex x : path_edges) {
          succ[static_cast<std::size_t>(x)].push_back(y);
          pred[static_cast<std::size_t>(y)].push_back(x);
        }
      }
    }

    // Distance-to-sink labels via breadth-first search over reversed arcs.
    while (!frontier.empty()) {
      const EdgeIndex at = frontier.front();
      frontier.pop();
      for (const EdgeIndex from : pred[static_cast<std::size_t>(at)])
        if (dist[static_cast<std::size_t>(from)] == unreached) {
          dist[static_cast<std::size_t>(from)] = dist[static_cast<std::size_t>(at)] + 1;
          frontier.push(from);
        }
    }

    EdgeIndex start = -1;
    for (const EdgeIndex y : ground_)
      if (is_source[static_cast<std::size_t>(y)] && dist[static_cast<std::size_t>(y)] != unreached &&
          (start == -1 ||
           dist[static_cast<std::size_t>(y)] < dist[static_cast<std::size_t>(start)] ||
           (dist[static_cast<std::size_t>(y)] == dist[static_cast<std::size_t>(start)] && y < start)))
        start = y;
    if (start == -1) return false;

    // Walk distances down greedily by least ordinal; with exact labels this
    // realizes the lexicographically least shortest path.
    std::vector<EdgeIndex> path{start};
    while (dist[static_cast<std::size_t>(path.back())] > 0) {
      const int want = dist[static_cast<std::size_t>(path.back())] - 1;
      EdgeIndex next = -1;
      for (const EdgeIndex cand : succ[static_cast<std::size_t>(path.back())])
        if (dist[static_cast<std::size_t>(cand)] == want && (next == -1 || cand < next))
          next = cand;
      path.push_back(next);
    }

    for (const EdgeIndex e : path) {
      const ColorId c = edges[static_cast<std::size_t>(e)].color;
      if (in_set_[static_cast<std::size_t>(e)]) {
        in_set_[static_cast<std::size_t>(e)] = 0;
        --usage_[static_cast<std::size_t>(c)];
      } else {
        in_set_[static_cast<std::size_t>(e)] = 1;
        ++usage_[static_cast<std::size_t>(c)];
      }
    }
    ++size_;
    return true;
  }

 private:
  const EdgeColoredGraph* g_;
  ColorBudget f_;
  std::vector<EdgeIndex> ground_;
  std::vector<char> in_set_;
  std::vector<int> usage_;
  int size_ = 0;
};

/// Keeps the first target_size edges. Any subset of a selection is again a
/// forest within caps, so a prefix is as good as any.
inline std::vector<EdgeIndex> truncate_to(std::vector<EdgeIndex> edges, int target_size) {
  if (target_size < 0 || static_cast<std::size_t>(target_size) > edges.size())
    throw InvalidArgumentError("truncation target " + std::to_string(target_size) +
                               " outside [0, " + std::to_string(edges.size()) + "]");
  edges.resize(static_cast<std::size_t>(target_size));
  return edges;
}

/// Builds a spanning forest with exactly w components whose per-color edge
/// counts respect f, or returns nothing when no such forest exists.
/// Augments until the forest needs no more edges, so the result has exactly
/// vertex_count - w edges; deterministic for identical inputs.
inline std::optional<SpanningForest> build_forest(const EdgeColoredGraph& g, const ColorBudget& f,
                                                  int w) {
  require_budget_for(g, f);
  if (w < 1 || w > g.vertex_count())
    throw PreconditionError("component target " + std::to_string(w) + " outside [1, " +
                            std::to_string(g.vertex_count()) + "]");
  const int target = g.vertex_count() - w;
  IntersectionState state(g, f);
  while (state.size() < target)
    if (!state.augment()) return std::nullopt;
  return SpanningForest{state.edges()};
}

}  // namespace fcsf
