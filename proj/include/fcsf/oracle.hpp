#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fcsf/graph.hpp"

namespace fcsf {

inline constexpr int brute_force_max_vertices = 10;
inline constexpr int brute_force_max_edges = 20;
inline constexpr int extremal_max_order = 30;

namespace detail {

/// Union by size without path compression, with an undo stack, so the
/// exhaustive search can backtrack in O(1).
class RollbackDsu {
 public:
  explicit RollbackDsu(int n)
      : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    trail_.push_back(b);
    return true;
  }

  /// Reverts the most recent successful unite.
  void undo() {
    const int b = trail_.back();
    trail_.pop_back();
    size_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(b)])] -=
        size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> trail_;
};

}  // namespace detail

/// Exhaustive ground truth for forest existence: enumerates edge subsets of
/// size vertex_count - w in lexicographic ordinal order, pruning branches as
/// soon as they close a cycle or exceed a color cap, and returns the first
/// acyclic cap-respecting subset. Hard-capped to desk-scale instances.
inline std::optional<SpanningForest> brute_force_forest(const EdgeColoredGraph& g,
                                                        const ColorBudget& f, int w) {
  require_budget_for(g, f);
  if (g.vertex_count() > brute_force_max_vertices)
    throw CapacityError("brute force is capped at " +
                        std::to_string(brute_force_max_vertices) + " vertices");
  if (g.edge_count() > brute_force_max_edges)
    throw CapacityError("brute force is capped at " +
                        std::to_string(brute_force_max_edges) + " edges");
  if (w < 1 || w > g.vertex_count())
    throw PreconditionError("component target " + std::to_string(w) +
                            " outside [1, " + std::to_string(g.vertex_count()) + "]");

  const int target = g.vertex_count() - w;
  std::vector<EdgeIndex> chosen;
  chosen.reserve(static_cast<std::size_t>(target));
  if (target == 0) return SpanningForest{};

  detail::RollbackDsu dsu(g.vertex_count());
  std::vector<int> usage(static_cast<std::size_t>(g.color_count()), 0);

  const auto& edges = g.edges();
  const int edge_count = g.edge_count();

  auto search = [&](auto&& self, int pos) -> bool {
    if (static_cast<int>(chosen.size()) == target) return true;
    const int needed = target - static_cast<int>(chosen.size());
    if (edge_count - pos < needed) return false;
    const Edge& e = edges[static_cast<std::size_t>(pos)];
    if (usage[static_cast<std::size_t>(e.color)] < f.cap(e.color) && dsu.unite(e.u, e.v)) {
      ++usage[static_cast<std::size_t>(e.color)];
      chosen.push_back(pos);
      if (self(self, pos + 1)) return true;
      chosen.pop_back();
      --usage[static_cast<std::size_t>(e.color)];
      dsu.undo();
    }
    return self(self, pos + 1);
  };

  if (!search(search, 0)) return std::nullopt;
  return SpanningForest{std::move(chosen)};
}

/// Exact maximum edge count of a bipartite graph with a given order and
/// component count, by enumerating all partitions of the order into that
/// many positive parts; each part contributes a balanced complete bipartite
/// component.
inline long long extremal_bipartite_max_edges(int order, int components) {
  if (order < 1 || order > extremal_max_order)
    throw CapacityError("order must be in [1, " + std::to_string(extremal_max_order) + "]");
  if (components < 1 || components > order)
    throw PreconditionError("component count " + std::to_string(components) +
                            " outside [1, " + std::to_string(order) + "]");

  auto part_value = [](int k) -> long long {
    return static_cast<long long>(k / 2) * ((k + 1) / 2);
  };

  long long best = 0;
  // Non-increasing part sequences only, to visit each partition once.
  auto rec = [&](auto&& self, int remaining, int parts, int max_part, long long acc) -> void {
    if (parts == 1) {
      if (remaining <= max_part) best = std::max(best, acc + part_value(remaining));
      return;
    }
    const int hi = std::min(max_part, remaining - (parts - 1));
    const int lo = (remaining + parts - 1) / parts;
    for (int k = hi; k >= lo; --k)
      self(self, remaining - k, parts - 1, k, acc + part_value(k));
  };
  rec(rec, order, components, order, 0);
  return best;
}

/// One generated instance: a graph, a complete budget over its colors and a
/// component target, plus the seed that reproduces it in sampling mode.
struct Instance {
  EdgeColoredGraph graph;
  ColorBudget budget;
  int w = 1;
  std::uint64_t seed = 0;
};

/// Parameters for instance generation within the brute-force caps.
struct InstanceFamily {
  enum class Mode { enumeration, sampling };

  Mode mode = Mode::sampling;
  int max_vertices = 8;
  int max_colors = 4;
  int max_cap = 3;
  int max_w = 4;
  int max_edges = brute_force_max_edges;  // sampling only
  std::uint64_t seed = 1;                 // sampling only
  long long trials = 10000;               // sampling only
};

namespace detail {

inline void validate_family(const InstanceFamily& fam) {
  if (fam.max_vertices < 1 || fam.max_vertices > brute_force_max_vertices)
    throw CapacityError("family vertex bound " + std::to_string(fam.max_vertices) +
                        " incompatible with the brute-force cap of " +
                        std::to_string(brute_force_max_vertices));
  if (fam.max_edges < 0 || fam.max_edges > brute_force_max_edges)
    throw CapacityError("family edge bound incompatible with the brute-force cap of " +
                        std::to_string(brute_force_max_edges));
  if (fam.max_colors < 1 || fam.max_colors > ColorSet::max_colors)
    throw InvalidArgumentError("family color bound out of range");
  if (fam.max_cap < 0) throw InvalidArgumentError("negative family cap bound");
  if (fam.max_w < 1) throw InvalidArgumentError("family component bound out of range");
  if (fam.mode == InstanceFamily::Mode::sampling && fam.trials < 0)
    throw InvalidArgumentError("negative trial count");
}

inline std::uint64_t trial_seed(std::uint64_t base, long long trial) {
  return base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1);
}

}  // namespace detail

/// The seeded random instance for one sampling-mode trial. Deterministic in
/// (family.seed, trial); enumerate_instances delegates here trial by trial.
inline Instance sample_instance(const InstanceFamily& fam, long long trial) {
  detail::validate_family(fam);
  const std::uint64_t seed = detail::trial_seed(fam.seed, trial);
  std::mt19937_64 rng(seed);

  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(fam.max_vertices));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  const int edge_cap = std::min<int>(fam.max_edges, static_cast<int>(pairs.size()));
  const int edge_count = static_cast<int>(rng() % static_cast<std::uint64_t>(edge_cap + 1));
  for (int i = 0; i < edge_count; ++i) {
    const auto j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(pairs.size() - static_cast<std::size_t>(i)));
    std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(j)]);
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count));
  for (int i = 0; i < edge_count; ++i) {
    const auto [u, v] = pairs[static_cast<std::size_t>(i)];
    edges.push_back({u, v, static_cast<ColorId>(rng() % static_cast<std::uint64_t>(fam.max_colors))});
  }

  std::vector<int> caps(static_cast<std::size_t>(fam.max_colors));
  for (int& c : caps) c = static_cast<int>(rng() % static_cast<std::uint64_t>(fam.max_cap + 1));

  const int w_hi = std::min(n, fam.max_w);
  const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(w_hi));

  return Instance{EdgeColoredGraph(n, std::move(edges), fam.max_colors),
                  ColorBudget(std::move(caps)), w, seed};
}

/// Streams (graph, budget, w) triples to fn.
///
/// Enumeration mode visits, for every vertex count up to the bound, every
/// labeled graph, every edge coloring in canonical first-use order (so each
/// coloring appears exactly once up to color permutation), every budget
/// vector with caps in [0, max_cap], and every w in [1, min(n, max_w)].
/// Sampling mode replays sample_instance for each trial. Both are
/// deterministic given the family.
///
/// stride/offset split the stream for parallel consumers: only instance
/// groups with group_index % stride == offset are emitted.
template <class Fn>
void enumerate_instances(const InstanceFamily& fam, Fn&& fn, long long stride = 1,
                         long long offset = 0) {
  detail::validate_family(fam);
  if (stride < 1 || offset < 0 || offset >= stride)
    throw InvalidArgumentError("bad stride/offset");

  if (fam.mode == InstanceFamily::Mode::sampling) {
    for (long long t = offset; t < fam.trials; t += stride) {
      Instance inst = sample_instance(fam, t);
      fn(inst.graph, inst.budget, inst.w);
    }
    return;
  }

  // All budget vectors, odometer order, hoisted out of the inner loops.
  std::vector<ColorBudget> budgets;
  {
    std::vector<int> caps(static_cast<std::size_t>(fam.max_colors), 0);
    while (true) {
      budgets.emplace_back(caps);
      int i = 0;
      while (i < fam.max_colors && caps[static_cast<std::size_t>(i)] == fam.max_cap)
        caps[static_cast<std::size_t>(i++)] = 0;
      if (i == fam.max_colors) break;
      ++caps[static_cast<std::size_t>(i)];
    }
  }

  long long group = 0;
  std::vector<ColorId> coloring;
  for (int n = 1; n <= fam.max_vertices; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int pair_count = static_cast<int>(pairs.size());

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count); ++mask) {
      std::vector<std::pair<VertexId, VertexId>> picked;
      for (int i = 0; i < pair_count; ++i)
        if ((mask >> i) & 1u) picked.push_back(pairs[static_cast<std::size_t>(i)]);
      const int edge_count = static_cast<int>(picked.size());

      coloring.assign(static_cast<std::size_t>(edge_count), 0);
      // First-use canonical colorings: edge i may reuse any color seen so
      // far or introduce the next fresh one.
      auto color_rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == edge_count) {
          if (group++ % stride != offset) return;
          std::vector<Edge> edges(static_cast<std::size_t>(edge_count));
          for (int i = 0; i < edge_count; ++i)
            edges[static_cast<std::size_t>(i)] = {picked[static_cast<std::size_t>(i)].first,
                                                  picked[static_cast<std::size_t>(i)].second,
                                                  coloring[static_cast<std::size_t>(i)]};
          const EdgeColoredGraph g(n, std::move(edges), fam.max_colors);
          for (const ColorBudget& f : budgets)
            for (int w = 1; w <= std::min(n, fam.max_w); ++w) fn(g, f, w);
          return;
        }
        const int limit = std::min(used + 1, fam.max_colors);
        for (ColorId c = 0; c < limit; ++c) {
          coloring[static_cast<std::size_t>(pos)] = c;
          self(self, pos + 1, std::max(used, c + 1));
        }
      };
      color_rec(color_rec, 0, 0);
    }
  }
}

}  // namespace fcsf
