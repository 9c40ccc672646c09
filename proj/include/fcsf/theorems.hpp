#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fcsf/certify.hpp"
#include "fcsf/color_set.hpp"
#include "fcsf/graph.hpp"

namespace fcsf {

/// Part sizes of a complete bipartite graph in the canonical layout: part A
/// is ids [0, left), part B is ids [left, left+right).
struct BipartiteShape {
  int left = 0;
  int right = 0;
};

/// Outcome of a premise check. Fails carry exactly one witness — a color
/// subset, a prefix length, or a single color — plus the failing arithmetic
/// spelled out in detail, so every verdict is recheckable by hand.
struct PremiseReport {
  bool holds = true;
  std::optional<ColorSet> violating_colors;
  std::optional<int> violating_prefix;
  std::optional<ColorId> violating_color;
  bool edge_clause_failed = false;
  std::string detail;
};

/// Closed-form extremal data for bipartite graphs of a given order and
/// component count: the rational ceiling (order-components+1)^2/4 on the edge
/// count, and the exact integer maximum attained by one balanced complete
/// bipartite component plus isolated vertices.
struct BipartiteEdgeBound {
  int order = 0;
  int component_count = 0;
  long long exact_max = 0;
  long long bound_numerator = 0;  // bound() times 4, kept exact

  double bound() const { return static_cast<double>(bound_numerator) / 4.0; }
};

inline BipartiteEdgeBound bipartite_component_bound(int order, int component_count) {
  if (order < 1) throw PreconditionError("order must be positive");
  if (component_count < 1 || component_count > order)
    throw PreconditionError("component count " + std::to_string(component_count) +
                            " outside [1, " + std::to_string(order) + "]");
  const long long k = order - component_count + 1;
  return BipartiteEdgeBound{order, component_count, (k / 2) * ((k + 1) / 2), k * k};
}

/// Asserts the canonical complete bipartite layout and returns its part
/// sizes. Part A must be [0, left) with every edge crossing into [left, ·).
inline BipartiteShape require_complete_bipartite(const EdgeColoredGraph& g) {
  const int total = g.vertex_count();
  int right = 0;
  for (const Edge& e : g.edges())
    if (e.u == 0 || e.v == 0) ++right;
  const int left = total - right;
  bool ok = left >= 1 && right >= 1 &&
            static_cast<long long>(left) * right == g.edge_count();
  if (ok)
    for (const Edge& e : g.edges()) {
      const auto [lo, hi] = std::minmax(e.u, e.v);
      if (lo >= left || hi < left) {
        ok = false;
        break;
      }
    }
  if (!ok) throw PreconditionError("not complete bipartite");
  return BipartiteShape{left, right};
}

namespace detail {

inline long long colored_edge_count(const EdgeColoredGraph& g, ColorSet r) {
  long long total = 0;
  r.for_each([&](ColorId c) { total += g.multiplicity(c); });
  return total;
}

inline std::string subset_failure_detail(long long edge_count, long long required) {
  return "4*" + std::to_string(edge_count) + " = " + std::to_string(4 * edge_count) +
         " <= " + std::to_string(required * required) + " = (" + std::to_string(required) +
         ")^2";
}

}  // namespace detail

/// Checks the sharp sufficient condition for complete bipartite graphs: for
/// every nonempty color subset R, the R-colored edges must number strictly
/// more than x^2/4, where x = vertex_count - w - (caps outside R) is how many
/// forest edges R must be able to supply. All comparisons are exact:
/// 4*|E_R| > x^2 in integers, even when x is negative.
///
/// The budget must be able to pay for the forest at all (total caps at least
/// vertex_count - w); anything less is rejected up front since no subset
/// condition could compensate.
inline PremiseReport check_bipartite_premise(const EdgeColoredGraph& g, const ColorBudget& f,
                                             int w) {
  require_complete_bipartite(g);
  require_budget_for(g, f);
  const int total = g.vertex_count();
  if (w < 1 || w > total)
    throw PreconditionError("component target " + std::to_string(w) + " outside [1, " +
                            std::to_string(total) + "]");
  if (f.total() < total - w)
    throw PreconditionError("total budget " + std::to_string(f.total()) +
                            " cannot cover the " + std::to_string(total - w) +
                            " edges of a forest with " + std::to_string(w) + " components");
  if (g.color_count() > max_enumerable_colors)
    throw CapacityError("subset checking is capped at " +
                        std::to_string(max_enumerable_colors) + " colors");

  PremiseReport report;
  for_each_subset_by_size(g.color_count(), [&](ColorSet r) {
    if (r.empty()) return false;
    const long long in_subset = detail::colored_edge_count(g, r);
    const long long required = total - w - (f.total() - f.sum_over(r));
    if (4 * in_subset > required * required) return false;
    report.holds = false;
    report.violating_colors = r;
    report.detail = "subset of " + std::to_string(r.size()) + " colors must supply " +
                    std::to_string(required) + " forest edges but has " +
                    std::to_string(in_subset) + ": " +
                    detail::subset_failure_detail(in_subset, required);
    return true;
  });
  return report;
}

namespace detail {

inline BipartiteShape require_balanced_all_colors_used(const EdgeColoredGraph& g) {
  const BipartiteShape shape = require_complete_bipartite(g);
  if (shape.left != shape.right)
    throw PreconditionError("parts must have equal size, got " + std::to_string(shape.left) +
                            " and " + std::to_string(shape.right));
  const int expected = 2 * shape.left - 1;
  if (g.color_count() != expected)
    throw PreconditionError("expected exactly " + std::to_string(expected) +
                            " colors for part size " + std::to_string(shape.left) + ", got " +
                            std::to_string(g.color_count()));
  for (ColorId c = 0; c < g.color_count(); ++c)
    if (g.multiplicity(c) == 0)
      throw PreconditionError("color ordinal " + std::to_string(c) + " has no edges");
  return shape;
}

}  // namespace detail

/// Checks the prefix form of the rainbow-tree condition on a complete
/// bipartite graph with equal parts of size n and exactly 2n-1 colors, each
/// used at least once: sorting the color multiplicities ascending, every
/// prefix of length r must sum to strictly more than r^2/4.
inline PremiseReport check_balanced_prefix_premise(const EdgeColoredGraph& g) {
  detail::require_balanced_all_colors_used(g);
  std::vector<int> mult = g.multiplicities();
  std::sort(mult.begin(), mult.end());

  PremiseReport report;
  long long prefix_sum = 0;
  for (int r = 1; r <= static_cast<int>(mult.size()); ++r) {
    prefix_sum += mult[static_cast<std::size_t>(r - 1)];
    if (4 * prefix_sum > static_cast<long long>(r) * r) continue;
    report.holds = false;
    report.violating_prefix = r;
    report.detail = "the " + std::to_string(r) + " rarest colors cover only " +
                    std::to_string(prefix_sum) + " edges: " +
                    detail::subset_failure_detail(prefix_sum, r);
    return report;
  }
  return report;
}

/// Subset form of the same condition: every nonempty color subset R must own
/// strictly more than |R|^2/4 edges. Agrees with the prefix form on every
/// valid input; the prefix form is this check restricted to the r rarest
/// colors, which minimize |E_R| at each size.
inline PremiseReport check_balanced_subset_premise(const EdgeColoredGraph& g) {
  detail::require_balanced_all_colors_used(g);
  if (g.color_count() > max_enumerable_colors)
    throw CapacityError("subset checking is capped at " +
                        std::to_string(max_enumerable_colors) + " colors");

  PremiseReport report;
  for_each_subset_by_size(g.color_count(), [&](ColorSet r) {
    if (r.empty()) return false;
    const long long in_subset = detail::colored_edge_count(g, r);
    const long long size = r.size();
    if (4 * in_subset > size * size) return false;
    report.holds = false;
    report.violating_colors = r;
    report.detail = "subset of " + std::to_string(size) + " colors has only " +
                    std::to_string(in_subset) + " edges: " +
                    detail::subset_failure_detail(in_subset, size);
    return true;
  });
  return report;
}

/// Density condition for arbitrary graphs: the graph must have strictly more
/// than C(n-w, 2) edges, and every color's multiplicity must satisfy
/// multiplicity(c) * (n-w) <= |E| * f(c), checked by exact cross
/// multiplication. The edge-count clause is reported first, then colors in
/// ascending ordinal order.
inline PremiseReport check_density_premise(const EdgeColoredGraph& g, const ColorBudget& f,
                                           int w) {
  require_budget_for(g, f);
  const int n = g.vertex_count();
  if (w < 1 || w > n - 1)
    throw PreconditionError("component target " + std::to_string(w) + " outside [1, " +
                            std::to_string(n - 1) + "]");

  PremiseReport report;
  const long long k = n - w;
  const long long edges = g.edge_count();
  const long long pairs = k * (k - 1) / 2;
  if (edges <= pairs) {
    report.holds = false;
    report.edge_clause_failed = true;
    report.detail = "edge count " + std::to_string(edges) + " <= " + std::to_string(pairs) +
                    " = C(" + std::to_string(k) + ", 2)";
    return report;
  }
  for (ColorId c = 0; c < g.color_count(); ++c) {
    const long long lhs = static_cast<long long>(g.multiplicity(c)) * k;
    const long long rhs = edges * f.cap(c);
    if (lhs <= rhs) continue;
    report.holds = false;
    report.violating_color = c;
    report.detail = "color ordinal " + std::to_string(c) + ": multiplicity " +
                    std::to_string(g.multiplicity(c)) + " * " + std::to_string(k) + " = " +
                    std::to_string(lhs) + " > " + std::to_string(rhs) + " = " +
                    std::to_string(edges) + " * cap " + std::to_string(f.cap(c));
    return report;
  }
  return report;
}

/// A complete bipartite instance sitting exactly on the premise threshold: a
/// balanced block on half+half vertices carries every edge colored inside
/// the subset, everything else is colored outside it, and 4*|E_subset| equals
/// block_order^2 exactly — so the premise fails at the subset and no
/// conforming forest exists.
struct SharpnessInstance {
  EdgeColoredGraph graph;
  int left = 0;
  int right = 0;
  int w = 1;
  ColorSet subset;
  int block_order = 0;  // vertex_count - w - (caps outside the subset)
  int half = 0;         // block_order / 2
};

/// Builds the threshold instance for the given part sizes, component target,
/// budget, and color subset. The block order p = left+right-w-(caps outside
/// the subset) must be positive and even with p/2 fitting in both parts; the
/// subset must be nonempty and proper so both zones have colors to use.
/// Colors rotate round-robin within each zone.
inline SharpnessInstance make_sharpness_instance(int left, int right, int w,
                                                 const ColorBudget& f, ColorSet subset) {
  if (left < 1 || right < 1) throw PreconditionError("part sizes must be positive");
  const int total = left + right;
  if (w < 1 || w > total)
    throw PreconditionError("component target " + std::to_string(w) + " outside [1, " +
                            std::to_string(total) + "]");
  if (!subset.subset_of(ColorSet::first(f.size())))
    throw UnknownColorError("subset mentions a color the budget does not cover");
  if (subset.empty()) throw PreconditionError("color subset must be nonempty");
  const ColorSet outside = subset.complement_in(f.size());
  if (outside.empty())
    throw PreconditionError("color subset must be proper: no colors left for the rest");

  const long long p_wide = total - w - f.sum_over(outside);
  if (p_wide <= 0)
    throw PreconditionError("block order " + std::to_string(p_wide) + " must be positive");
  if (p_wide % 2 != 0)
    throw PreconditionError("block order " + std::to_string(p_wide) + " must be even");
  const int p = static_cast<int>(p_wide);
  const int half = p / 2;
  if (half > left || half > right)
    throw PreconditionError("half block of " + std::to_string(half) +
                            " vertices exceeds a part of size " +
                            std::to_string(std::min(left, right)));

  const std::vector<ColorId> inside_colors = subset.members();
  const std::vector<ColorId> outside_colors = outside.members();
  std::size_t next_inside = 0;
  std::size_t next_outside = 0;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(left) * static_cast<std::size_t>(right));
  for (VertexId u = 0; u < left; ++u)
    for (VertexId v = left; v < total; ++v) {
      const bool in_block = u < half && v < left + half;
      ColorId color;
      if (in_block) {
        color = inside_colors[next_inside];
        next_inside = (next_inside + 1) % inside_colors.size();
      } else {
        color = outside_colors[next_outside];
        next_outside = (next_outside + 1) % outside_colors.size();
      }
      edges.push_back({u, v, color});
    }

  return SharpnessInstance{EdgeColoredGraph(total, std::move(edges), f.size()),
                           left,
                           right,
                           w,
                           subset,
                           p,
                           half};
}

/// Complete bipartite graph in the canonical layout with every edge's color
/// drawn independently and uniformly. Deterministic per seed.
inline EdgeColoredGraph random_bipartite_coloring(int left, int right, int color_count,
                                                  std::uint64_t seed) {
  if (left < 1 || right < 1) throw InvalidArgumentError("part sizes must be positive");
  if (color_count < 1) throw InvalidArgumentError("color set must be nonempty");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(left) * static_cast<std::size_t>(right));
  for (VertexId u = 0; u < left; ++u)
    for (VertexId v = left; v < left + right; ++v)
      edges.push_back(
          {u, v, static_cast<ColorId>(rng() % static_cast<std::uint64_t>(color_count))});
  return EdgeColoredGraph(left + right, std::move(edges), color_count);
}

/// Weighted variant: color probabilities proportional to the given
/// non-negative integer weights, which must cover every color and not all be
/// zero.
inline EdgeColoredGraph random_bipartite_coloring(int left, int right, int color_count,
                                                  std::uint64_t seed,
                                                  const std::vector<long long>& weights) {
  if (left < 1 || right < 1) throw InvalidArgumentError("part sizes must be positive");
  if (color_count < 1) throw InvalidArgumentError("color set must be nonempty");
  if (static_cast<int>(weights.size()) != color_count)
    throw InvalidArgumentError("need one weight per color");
  long long total_weight = 0;
  for (long long w : weights) {
    if (w < 0) throw InvalidArgumentError("negative color weight");
    total_weight += w;
  }
  if (total_weight == 0) throw InvalidArgumentError("all color weights are zero");

  std::mt19937_64 rng(seed);
  auto draw = [&]() -> ColorId {
    long long ticket = static_cast<long long>(rng() % static_cast<std::uint64_t>(total_weight));
    for (ColorId c = 0;; ++c) {
      ticket -= weights[static_cast<std::size_t>(c)];
      if (ticket < 0) return c;
    }
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(left) * static_cast<std::size_t>(right));
  for (VertexId u = 0; u < left; ++u)
    for (VertexId v = left; v < left + right; ++v) edges.push_back({u, v, draw()});
  return EdgeColoredGraph(left + right, std::move(edges), color_count);
}

}  // namespace fcsf
