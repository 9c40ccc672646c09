#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fcsf/certify.hpp"
#include "fcsf/construct.hpp"
#include "fcsf/graph.hpp"
#include "fcsf/oracle.hpp"
#include "fcsf/theorems.hpp"

namespace fcsf {

/// One campaign trial, in output order. m is -1 for instances without a
/// bipartite split. primary is the campaign's headline verdict (certificate
/// satisfied, or premise holds), forest_found reports the builder or oracle,
/// and ok is the per-trial agreement flag.
struct TrialRecord {
  long long index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int m = -1;
  int w = 1;
  bool primary = false;
  bool forest_found = false;
  bool ok = true;
};

/// Receives records in trial order regardless of how many workers ran.
using TrialSink = std::function<void(const TrialRecord&)>;

/// Tallies for the decision/search agreement campaign. Clean means the
/// certifier, the exhaustive search, and the builder never diverged and
/// every certificate survived independent recomputation.
struct AgreementStats {
  long long trials = 0;
  long long satisfied = 0;
  long long certifier_oracle_disagreements = 0;
  long long builder_disagreements = 0;
  long long invalid_witnesses = 0;
  long long recompute_failures = 0;

  bool clean() const {
    return certifier_oracle_disagreements == 0 && builder_disagreements == 0 &&
           invalid_witnesses == 0 && recompute_failures == 0;
  }
  long long failures() const {
    return certifier_oracle_disagreements + builder_disagreements + invalid_witnesses +
           recompute_failures;
  }
  AgreementStats& operator+=(const AgreementStats& o) {
    trials += o.trials;
    satisfied += o.satisfied;
    certifier_oracle_disagreements += o.certifier_oracle_disagreements;
    builder_disagreements += o.builder_disagreements;
    invalid_witnesses += o.invalid_witnesses;
    recompute_failures += o.recompute_failures;
    return *this;
  }
};

/// Tallies for the premise campaigns. A counterexample is a trial whose
/// premise held but where no valid forest came back — the theorems promise
/// zero. equivalence_breaks counts prefix/subset verdict splits and only
/// moves in the balanced campaign.
struct PremiseStats {
  long long trials = 0;
  long long premise_holds = 0;
  long long counterexamples = 0;
  long long equivalence_breaks = 0;
  long long invalid_witnesses = 0;

  bool clean() const {
    return counterexamples == 0 && equivalence_breaks == 0 && invalid_witnesses == 0;
  }
  long long failures() const { return counterexamples + equivalence_breaks + invalid_witnesses; }
  PremiseStats& operator+=(const PremiseStats& o) {
    trials += o.trials;
    premise_holds += o.premise_holds;
    counterexamples += o.counterexamples;
    equivalence_breaks += o.equivalence_breaks;
    invalid_witnesses += o.invalid_witnesses;
    return *this;
  }
};

/// Shared knobs for the seeded premise campaigns.
struct PremiseCampaignConfig {
  long long trials = 10000;
  std::uint64_t seed = 1;
  int max_part = 6;      // bipartite part sizes
  int max_vertices = 8;  // general-graph campaign
  int max_colors = 8;
  int max_cap = 3;
};

namespace detail {

/// Runs body(trial, seed, stats) for every trial, spreading trials across
/// jobs workers. Records are buffered per worker and replayed to the sink in
/// trial order; stats are reduced in worker order, so results are identical
/// for any job count. The first exception from any worker is rethrown.
template <class Stats, class Body>
Stats run_seeded_trials(long long trials, std::uint64_t base_seed, const TrialSink& sink,
                        int jobs, Body&& body) {
  if (trials < 0) throw InvalidArgumentError("negative trial count");
  const int workers =
      static_cast<int>(std::max<long long>(1, std::min<long long>(jobs, std::max<long long>(trials, 1))));

  if (workers == 1) {
    Stats stats{};
    for (long long t = 0; t < trials; ++t) {
      TrialRecord rec = body(t, trial_seed(base_seed, t), stats);
      rec.index = t;
      if (sink) sink(rec);
    }
    return stats;
  }

  std::vector<Stats> partial(static_cast<std::size_t>(workers), Stats{});
  std::vector<std::vector<TrialRecord>> buffered(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int j = 0; j < workers; ++j)
    pool.emplace_back([&, j] {
      try {
        for (long long t = j; t < trials; t += workers) {
          TrialRecord rec = body(t, trial_seed(base_seed, t), partial[static_cast<std::size_t>(j)]);
          rec.index = t;
          if (sink) buffered[static_cast<std::size_t>(j)].push_back(rec);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(j)] = std::current_exception();
      }
    });
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);

  Stats stats{};
  for (const Stats& s : partial) stats += s;
  if (sink) {
    std::vector<TrialRecord> all;
    for (std::vector<TrialRecord>& b : buffered)
      all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end(),
              [](const TrialRecord& a, const TrialRecord& b) { return a.index < b.index; });
    for (const TrialRecord& rec : all) sink(rec);
  }
  return stats;
}

/// Cross-checks one instance: certifier vs exhaustive search vs builder,
/// plus recomputation of any violation certificate from scratch.
inline TrialRecord evaluate_agreement(const EdgeColoredGraph& g, const ColorBudget& f, int w,
                                      AgreementStats& stats) {
  TrialRecord rec;
  rec.n = g.vertex_count();
  rec.w = w;

  const Certificate cert = check_forest_condition(g, f, w);
  const auto found = brute_force_forest(g, f, w);
  const auto built = build_forest(g, f, w);

  rec.primary = cert.satisfied();
  rec.forest_found = found.has_value();
  bool ok = true;
  if (cert.satisfied() != found.has_value()) {
    ++stats.certifier_oracle_disagreements;
    ok = false;
  }
  if (built.has_value() != cert.satisfied()) {
    ++stats.builder_disagreements;
    ok = false;
  }
  if (built && !validate_spanning_forest(g, *built, f, w)) {
    ++stats.invalid_witnesses;
    ok = false;
  }
  if (!cert.satisfied()) {
    const int observed = g.component_count_without_colors(cert.violating_colors);
    const long long bound = w + f.sum_over(cert.violating_colors);
    if (observed != cert.observed_components || bound != cert.bound || observed <= bound) {
      ++stats.recompute_failures;
      ok = false;
    }
  } else {
    ++stats.satisfied;
  }
  ++stats.trials;
  rec.ok = ok;
  return rec;
}

}  // namespace detail

/// Agreement campaign over a whole instance family: every emitted (graph,
/// budget, w) is judged by the certifier, the exhaustive search, and the
/// builder, and any divergence is counted. In enumeration mode with several
/// workers the stream is split by instance group; per-trial records are then
/// only available single-threaded, so a sink forces one worker there.
inline AgreementStats run_iff_agreement(const InstanceFamily& family,
                                        const TrialSink& sink = nullptr, int jobs = 1) {
  if (jobs < 1) throw InvalidArgumentError("worker count must be positive");

  if (family.mode == InstanceFamily::Mode::sampling) {
    return detail::run_seeded_trials<AgreementStats>(
        family.trials, family.seed, sink, jobs,
        [&](long long trial, std::uint64_t, AgreementStats& stats) {
          const Instance inst = sample_instance(family, trial);
          TrialRecord rec = detail::evaluate_agreement(inst.graph, inst.budget, inst.w, stats);
          rec.seed = inst.seed;
          return rec;
        });
  }

  if (jobs == 1 || sink) {
    AgreementStats stats;
    long long index = 0;
    enumerate_instances(family, [&](const EdgeColoredGraph& g, const ColorBudget& f, int w) {
      TrialRecord rec = detail::evaluate_agreement(g, f, w, stats);
      rec.index = index;
      rec.seed = static_cast<std::uint64_t>(index);
      ++index;
      if (sink) sink(rec);
    });
    return stats;
  }

  std::vector<AgreementStats> partial(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      try {
        enumerate_instances(
            family,
            [&](const EdgeColoredGraph& g, const ColorBudget& f, int w) {
              detail::evaluate_agreement(g, f, w, partial[static_cast<std::size_t>(j)]);
            },
            jobs, j);
      } catch (...) {
        errors[static_cast<std::size_t>(j)] = std::current_exception();
      }
    });
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& err : errors)
    if (err) std::rethrow_exception(err);
  AgreementStats stats;
  for (const AgreementStats& s : partial) stats += s;
  return stats;
}

/// Premise-to-forest campaign on random complete bipartite colorings with
/// random budgets, topped up round-robin until the budget can pay for the
/// forest. Whenever the premise holds the builder must deliver a valid
/// forest; anything else is a counterexample.
inline PremiseStats run_bipartite_premise_campaign(const PremiseCampaignConfig& cfg,
                                                   const TrialSink& sink = nullptr,
                                                   int jobs = 1) {
  if (cfg.max_part < 1 || cfg.max_colors < 1 || cfg.max_cap < 0)
    throw InvalidArgumentError("bad campaign bounds");
  return detail::run_seeded_trials<PremiseStats>(
      cfg.trials, cfg.seed, sink, jobs,
      [&](long long, std::uint64_t seed, PremiseStats& stats) {
        std::mt19937_64 rng(seed);
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_part));
        const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_part));
        const int colors =
            1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_colors));
        const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n + m));

        std::vector<int> caps(static_cast<std::size_t>(colors));
        long long cap_sum = 0;
        for (int& c : caps) {
          c = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_cap + 1));
          cap_sum += c;
        }
        for (int i = 0; cap_sum < n + m - w; ++i, ++cap_sum)
          ++caps[static_cast<std::size_t>(i % colors)];
        const ColorBudget f{std::move(caps)};

        const EdgeColoredGraph g = random_bipartite_coloring(n, m, colors, rng());
        const PremiseReport premise = check_bipartite_premise(g, f, w);
        const auto built = build_forest(g, f, w);
        const bool valid = built && validate_spanning_forest(g, *built, f, w);

        TrialRecord rec;
        rec.seed = seed;
        rec.n = n;
        rec.m = m;
        rec.w = w;
        rec.primary = premise.holds;
        rec.forest_found = built.has_value();
        rec.ok = true;
        ++stats.trials;
        if (premise.holds) ++stats.premise_holds;
        if (built && !valid) {
          ++stats.invalid_witnesses;
          rec.ok = false;
        }
        if (premise.holds && !valid) {
          ++stats.counterexamples;
          rec.ok = false;
        }
        return rec;
      });
}

/// Equivalence campaign on balanced complete bipartite instances with
/// 2n-1 colors, each used at least once: the prefix and subset premises must
/// agree, and whenever they hold a rainbow spanning tree must exist.
inline PremiseStats run_balanced_equivalence_campaign(const PremiseCampaignConfig& cfg,
                                                      const TrialSink& sink = nullptr,
                                                      int jobs = 1) {
  if (cfg.max_part < 1) throw InvalidArgumentError("bad campaign bounds");
  return detail::run_seeded_trials<PremiseStats>(
      cfg.trials, cfg.seed, sink, jobs,
      [&](long long, std::uint64_t seed, PremiseStats& stats) {
        std::mt19937_64 rng(seed);
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_part));
        const int colors = 2 * n - 1;

        // Shuffle the cross pairs; the first 2n-1 get one edge of each color
        // so every color is used, the rest draw uniformly.
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId u = 0; u < n; ++u)
          for (VertexId v = n; v < 2 * n; ++v) pairs.emplace_back(u, v);
        for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
          const std::size_t j = i + rng() % (pairs.size() - i);
          std::swap(pairs[i], pairs[j]);
        }
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          const ColorId c = i < static_cast<std::size_t>(colors)
                                ? static_cast<ColorId>(i)
                                : static_cast<ColorId>(rng() % static_cast<std::uint64_t>(colors));
          edges.push_back({pairs[i].first, pairs[i].second, c});
        }
        const EdgeColoredGraph g(2 * n, std::move(edges), colors);

        const PremiseReport prefix = check_balanced_prefix_premise(g);
        const PremiseReport subset = check_balanced_subset_premise(g);
        const Certificate tree = check_heterochromatic_tree(g);

        TrialRecord rec;
        rec.seed = seed;
        rec.n = n;
        rec.m = n;
        rec.w = 1;
        rec.primary = subset.holds;
        rec.forest_found = tree.satisfied();
        rec.ok = true;
        ++stats.trials;
        if (subset.holds) ++stats.premise_holds;
        if (prefix.holds != subset.holds) {
          ++stats.equivalence_breaks;
          rec.ok = false;
        }
        if (subset.holds && !tree.satisfied()) {
          ++stats.counterexamples;
          rec.ok = false;
        }
        return rec;
      });
}

/// Premise-to-forest campaign for the density condition on random general
/// graphs with random budgets.
inline PremiseStats run_density_premise_campaign(const PremiseCampaignConfig& cfg,
                                                 const TrialSink& sink = nullptr,
                                                 int jobs = 1) {
  if (cfg.max_vertices < 2 || cfg.max_colors < 1 || cfg.max_cap < 0)
    throw InvalidArgumentError("bad campaign bounds");
  return detail::run_seeded_trials<PremiseStats>(
      cfg.trials, cfg.seed, sink, jobs,
      [&](long long, std::uint64_t seed, PremiseStats& stats) {
        std::mt19937_64 rng(seed);
        const int n =
            2 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_vertices - 1));
        const int colors =
            1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_colors));
        const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));

        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId u = 0; u < n; ++u)
          for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const int edge_count = static_cast<int>(rng() % (pairs.size() + 1));
        for (int i = 0; i < edge_count; ++i) {
          const std::size_t j =
              static_cast<std::size_t>(i) + rng() % (pairs.size() - static_cast<std::size_t>(i));
          std::swap(pairs[static_cast<std::size_t>(i)], pairs[j]);
        }
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(edge_count));
        for (int i = 0; i < edge_count; ++i)
          edges.push_back({pairs[static_cast<std::size_t>(i)].first,
                           pairs[static_cast<std::size_t>(i)].second,
                           static_cast<ColorId>(rng() % static_cast<std::uint64_t>(colors))});
        const EdgeColoredGraph g(n, std::move(edges), colors);

        std::vector<int> caps(static_cast<std::size_t>(colors));
        for (int& c : caps)
          c = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_cap + 1));
        const ColorBudget f{std::move(caps)};

        const PremiseReport premise = check_density_premise(g, f, w);
        const auto built = build_forest(g, f, w);
        const bool valid = built && validate_spanning_forest(g, *built, f, w);

        TrialRecord rec;
        rec.seed = seed;
        rec.n = n;
        rec.w = w;
        rec.primary = premise.holds;
        rec.forest_found = built.has_value();
        rec.ok = true;
        ++stats.trials;
        if (premise.holds) ++stats.premise_holds;
        if (built && !valid) {
          ++stats.invalid_witnesses;
          rec.ok = false;
        }
        if (premise.holds && !valid) {
          ++stats.counterexamples;
          rec.ok = false;
        }
        return rec;
      });
}

/// Tallies for the threshold-instance sweep.
struct SharpnessStats {
  long long tested = 0;
  long long exceptions = 0;

  bool clean() const { return tested > 0 && exceptions == 0; }
};

/// Sweeps every valid threshold instance over part sizes up to max_part,
/// a fixed family of budget shapes on 2..5 colors, and all proper nonempty
/// color subsets. Each instance must sit exactly on the premise threshold,
/// fail the premise, and admit no forest.
inline SharpnessStats run_sharpness_grid(int max_part) {
  if (max_part < 1) throw InvalidArgumentError("part bound must be positive");

  SharpnessStats stats;
  for (int colors = 2; colors <= 5; ++colors) {
    std::vector<ColorBudget> budgets;
    std::vector<int> caps(static_cast<std::size_t>(colors));
    for (int pattern = 0; pattern < 4; ++pattern) {
      for (int i = 0; i < colors; ++i) {
        switch (pattern) {
          case 0: caps[static_cast<std::size_t>(i)] = 1; break;
          case 1: caps[static_cast<std::size_t>(i)] = 2; break;
          case 2: caps[static_cast<std::size_t>(i)] = 1 + i % 2; break;
          default: caps[static_cast<std::size_t>(i)] = i % 3; break;
        }
      }
      budgets.emplace_back(caps);
    }

    for (const ColorBudget& f : budgets)
      for (int left = 1; left <= max_part; ++left)
        for (int right = 1; right <= max_part; ++right)
          for (int w = 1; w <= left + right; ++w) {
            if (f.total() < left + right - w) continue;
            for_each_subset_by_size(colors, [&](ColorSet subset) {
              if (subset.empty() || subset.size() == colors) return false;
              const ColorSet outside = subset.complement_in(colors);
              const long long p = left + right - w - f.sum_over(outside);
              if (p <= 0 || p % 2 != 0 || p / 2 > std::min(left, right)) return false;

              const SharpnessInstance inst =
                  make_sharpness_instance(left, right, w, f, subset);
              const long long in_subset = detail::colored_edge_count(inst.graph, subset);
              const bool on_threshold =
                  4 * in_subset == p * p && inst.block_order == p;
              const bool premise_fails =
                  !check_bipartite_premise(inst.graph, f, w).holds;
              const bool no_forest =
                  !check_forest_condition(inst.graph, f, w).satisfied();
              ++stats.tested;
              if (!(on_threshold && premise_fails && no_forest)) ++stats.exceptions;
              return false;
            });
          }
  }
  return stats;
}

}  // namespace fcsf
