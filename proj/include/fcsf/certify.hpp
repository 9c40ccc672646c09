#pragma once

#include <optional>
#include <string>

#include "fcsf/color_set.hpp"
#include "fcsf/construct.hpp"
#include "fcsf/graph.hpp"

namespace fcsf {

/// Exhaustive color-subset checking enumerates 2^|C| subsets; refuse wider
/// color sets rather than degrade silently.
inline constexpr int max_enumerable_colors = 24;

enum class Verdict { Satisfied, Violated };

/// Outcome of the forest-existence decision. A Violated verdict names a color
/// subset R whose removal disconnects the graph beyond what the budget can
/// repair: observed_components is the component count after deleting every
/// R-colored edge, bound is w plus the caps of R, and observed > bound. Both
/// numbers are recomputable from (graph, R, budget, w) alone. A Satisfied
/// verdict optionally carries a witness forest.
struct Certificate {
  Verdict verdict = Verdict::Satisfied;
  ColorSet violating_colors;
  int observed_components = 0;
  int bound = 0;
  std::optional<SpanningForest> witness;

  bool satisfied() const { return verdict == Verdict::Satisfied; }
};

/// Decides whether the graph has a spanning forest with exactly w components
/// whose per-color edge counts respect f.
///
/// Checks, for every color subset R, that deleting the R-colored edges leaves
/// at most w + sum of caps over R components; the two sides of that check are
/// exactly what a Violated certificate reports. Subsets are visited smallest
/// first and in lexicographic order within a size, and the first violation
/// wins, so certificates favor small violating sets. Subsets whose bound
/// reaches the vertex count are skipped — the component count can never
/// exceed it. When all subsets pass, a forest exists; with_witness asks the
/// builder for one.
inline Certificate check_forest_condition(const EdgeColoredGraph& g, const ColorBudget& f, int w,
                                          bool with_witness = false) {
  require_budget_for(g, f);
  if (w < 1 || w > g.vertex_count())
    throw PreconditionError("component target " + std::to_string(w) + " outside [1, " +
                            std::to_string(g.vertex_count()) + "]");
  if (g.color_count() > max_enumerable_colors)
    throw CapacityError("subset checking is capped at " +
                        std::to_string(max_enumerable_colors) + " colors");

  Certificate cert;
  for_each_subset_by_size(g.color_count(), [&](ColorSet r) {
    const long long bound = w + f.sum_over(r);
    if (g.vertex_count() <= bound) return false;
    const int observed = g.component_count_without_colors(r);
    if (observed <= bound) return false;
    cert.verdict = Verdict::Violated;
    cert.violating_colors = r;
    cert.observed_components = observed;
    cert.bound = static_cast<int>(bound);
    return true;
  });
  if (cert.satisfied() && with_witness) {
    auto forest = build_forest(g, f, w);
    if (!forest)
      throw Error("internal inconsistency: subset check passed but no forest was built");
    cert.witness = std::move(*forest);
  }
  return cert;
}

/// Decides whether the graph has a spanning tree using each color at most
/// once: the all-caps-one, single-component case of the forest condition.
inline Certificate check_heterochromatic_tree(const EdgeColoredGraph& g,
                                              bool with_witness = false) {
  return check_forest_condition(g, ColorBudget::uniform(g.color_count(), 1), 1, with_witness);
}

/// Decides whether a connected graph has a spanning forest with exactly
/// vertex_count - k components using each color at most once. Equivalently:
/// k edges, no color repeated.
inline Certificate check_heterochromatic_forest(const EdgeColoredGraph& g, int k,
                                                bool with_witness = false) {
  if (!g.is_connected()) throw PreconditionError("graph must be connected");
  if (k < 1 || k > g.vertex_count() - 1)
    throw PreconditionError("edge target " + std::to_string(k) + " outside [1, " +
                            std::to_string(g.vertex_count() - 1) + "]");
  return check_forest_condition(g, ColorBudget::uniform(g.color_count(), 1),
                                g.vertex_count() - k, with_witness);
}

}  // namespace fcsf
