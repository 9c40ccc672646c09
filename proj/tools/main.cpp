// Command-line surface for the f-chromatic spanning forest library: decide
// and certify forest existence, build witnesses, check the sufficient-
// condition premises, generate threshold instances, and run verification
// campaigns against the brute-force oracle.
//
// Exit codes: 0 success / condition holds; 1 negative verdict (violated,
// no forest, premise fails, campaign failures); 2 usage or validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcsf/fcsf.hpp"

namespace {

struct LoadedInstance {
  fcsf::ParsedGraph parsed;
  fcsf::ColorBudget budget;
};

/// Reads the graph and its budget; with no budget file every cap defaults
/// to one, the rainbow case.
LoadedInstance load_instance(const std::string& graph_path, const std::string& budget_path) {
  fcsf::ParsedGraph parsed = fcsf::parse_graph_file(graph_path);
  fcsf::ColorBudget budget =
      budget_path.empty() ? fcsf::ColorBudget::uniform(parsed.graph.color_count(), 1)
                          : fcsf::parse_budget_file(budget_path, parsed.colors);
  return LoadedInstance{std::move(parsed), std::move(budget)};
}

std::string color_set_names(fcsf::ColorSet set, const fcsf::ColorTable& colors) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](fcsf::ColorId c) {
    if (!first) out += ", ";
    first = false;
    out += colors.name(c);
  });
  out += "}";
  return out;
}

/// "6" or "6.25": quarters are the only fractions that occur.
std::string format_quarter(long long numerator) {
  std::string out = std::to_string(numerator / 4);
  if (numerator % 4 != 0) out += ".25";
  return out;
}

void print_witness_edges(const fcsf::SpanningForest& forest, const fcsf::EdgeColoredGraph& g,
                         const fcsf::ColorTable& colors) {
  for (const fcsf::EdgeIndex i : forest.edges) {
    const fcsf::Edge& e = g.edges()[static_cast<std::size_t>(i)];
    std::cout << "edge " << e.u << ' ' << e.v << ' ' << colors.name(e.color) << '\n';
  }
}

/// Prose rendering of a violation with both sides recomputed from scratch,
/// so the numbers can be checked by hand.
void print_violation(const fcsf::Certificate& cert, const fcsf::EdgeColoredGraph& g,
                     const fcsf::ColorBudget& f, int w, const fcsf::ColorTable& colors) {
  const int observed = g.component_count_without_colors(cert.violating_colors);
  const long long caps = f.sum_over(cert.violating_colors);
  std::cout << "violated\n";
  std::cout << "violating colors: " << color_set_names(cert.violating_colors, colors) << '\n';
  std::cout << "components after removing them: " << observed << '\n';
  std::cout << "allowed: w (" << w << ") + caps in subset (" << caps << ") = " << w + caps
            << '\n';
  std::cout << "recheck: " << observed << " > " << w + caps << " confirms the violation\n";
}

int run_check(const std::string& graph_path, const std::string& budget_path, int w, int k,
              bool with_witness, bool machine) {
  const LoadedInstance in = load_instance(graph_path, budget_path);
  const fcsf::EdgeColoredGraph& g = in.parsed.graph;

  fcsf::Certificate cert;
  int effective_w = w;
  if (k > 0) {
    if (!budget_path.empty())
      throw fcsf::InvalidArgumentError("-k fixes every cap at one; drop --budget");
    cert = fcsf::check_heterochromatic_forest(g, k, with_witness);
    effective_w = g.vertex_count() - k;
  } else {
    cert = fcsf::check_forest_condition(g, in.budget, w, with_witness);
  }

  if (machine) {
    std::cout << fcsf::certificate_to_json(cert, g, in.parsed.colors) << '\n';
  } else if (cert.satisfied()) {
    std::cout << "satisfied\n";
    if (cert.witness) {
      print_witness_edges(*cert.witness, g, in.parsed.colors);
      const bool valid = fcsf::validate_spanning_forest(
          g, *cert.witness, k > 0 ? fcsf::ColorBudget::uniform(g.color_count(), 1) : in.budget,
          effective_w);
      std::cout << "witness check: " << cert.witness->size() << " edges, "
                << (valid ? "valid" : "INVALID") << '\n';
    }
  } else {
    print_violation(cert, g,
                    k > 0 ? fcsf::ColorBudget::uniform(g.color_count(), 1) : in.budget,
                    effective_w, in.parsed.colors);
  }
  return cert.satisfied() ? 0 : 1;
}

int run_construct(const std::string& graph_path, const std::string& budget_path, int w,
                  bool machine) {
  const LoadedInstance in = load_instance(graph_path, budget_path);
  const fcsf::EdgeColoredGraph& g = in.parsed.graph;

  const auto forest = fcsf::build_forest(g, in.budget, w);
  if (forest) {
    if (machine) {
      fcsf::Certificate cert;
      cert.witness = *forest;
      std::cout << fcsf::certificate_to_json(cert, g, in.parsed.colors) << '\n';
    } else {
      print_witness_edges(*forest, g, in.parsed.colors);
    }
    return 0;
  }

  if (g.color_count() <= fcsf::max_enumerable_colors) {
    const fcsf::Certificate cert = fcsf::check_forest_condition(g, in.budget, w);
    if (machine) {
      std::cout << fcsf::certificate_to_json(cert, g, in.parsed.colors) << '\n';
    } else {
      std::cout << "no forest with " << w << " components fits the caps\n";
      print_violation(cert, g, in.budget, w, in.parsed.colors);
    }
  } else if (machine) {
    std::cout << "{\"verdict\":\"violated\"}\n";
  } else {
    std::cout << "no forest with " << w << " components fits the caps\n";
    std::cout << "certificate omitted: more than " << fcsf::max_enumerable_colors
              << " colors\n";
  }
  return 1;
}

int report_premise(const fcsf::PremiseReport& report, const fcsf::ColorTable& colors,
                   bool machine) {
  if (machine) {
    std::cout << fcsf::premise_report_to_json(report, colors) << '\n';
  } else if (report.holds) {
    std::cout << "holds\n";
  } else {
    std::cout << "fails\n";
    if (report.violating_colors)
      std::cout << "violating colors: " << color_set_names(*report.violating_colors, colors)
                << '\n';
    if (report.violating_prefix)
      std::cout << "violating prefix length: " << *report.violating_prefix << '\n';
    if (report.violating_color)
      std::cout << "violating color: " << colors.name(*report.violating_color) << '\n';
    if (!report.detail.empty()) std::cout << report.detail << '\n';
  }
  return report.holds ? 0 : 1;
}

int run_theorem(const std::string& variant, const std::string& graph_path,
                const std::string& budget_path, int w, int order, int components,
                bool machine) {
  if (variant == "lemma") {
    if (order < 1 || components < 1)
      throw fcsf::InvalidArgumentError("lemma needs -n <order> and -s <components>");
    const fcsf::BipartiteEdgeBound b = fcsf::bipartite_component_bound(order, components);
    if (machine)
      std::cout << "{\"order\":" << b.order << ",\"components\":" << b.component_count
                << ",\"bound\":" << format_quarter(b.bound_numerator)
                << ",\"exact_max\":" << b.exact_max << "}\n";
    else
      std::cout << "bound " << format_quarter(b.bound_numerator) << " exact " << b.exact_max
                << '\n';
    return 0;
  }

  if (graph_path.empty()) throw fcsf::InvalidArgumentError("--graph is required");
  const LoadedInstance in = load_instance(graph_path, budget_path);
  fcsf::PremiseReport report;
  if (variant == "main")
    report = fcsf::check_bipartite_premise(in.parsed.graph, in.budget, w);
  else if (variant == "bh-prefix")
    report = fcsf::check_balanced_prefix_premise(in.parsed.graph);
  else if (variant == "bh-subset")
    report = fcsf::check_balanced_subset_premise(in.parsed.graph);
  else
    report = fcsf::check_density_premise(in.parsed.graph, in.budget, w);
  return report_premise(report, in.parsed.colors, machine);
}

int run_sharpness(int left, int right, int w, const std::string& budget_path, int num_colors,
                  const std::vector<std::string>& subset_names, const std::string& output_path,
                  bool machine) {
  fcsf::ParsedBudget budget_and_colors;
  if (!budget_path.empty()) {
    if (num_colors > 0)
      throw fcsf::InvalidArgumentError("give either --budget or --num-colors, not both");
    budget_and_colors = fcsf::parse_budget_file(budget_path);
  } else if (num_colors > 0) {
    budget_and_colors = fcsf::ParsedBudget{fcsf::ColorBudget::uniform(num_colors, 1),
                                           fcsf::ColorTable::generated(num_colors)};
  } else {
    throw fcsf::InvalidArgumentError("need --budget FILE or --num-colors N to fix the colors");
  }
  if (subset_names.empty()) throw fcsf::InvalidArgumentError("--colors must name the subset");

  fcsf::ColorSet subset;
  for (const std::string& name : subset_names) {
    const auto id = budget_and_colors.colors.find(name);
    if (!id) throw fcsf::UnknownColorError("unknown color '" + name + "'");
    subset.insert(*id);
  }

  const fcsf::SharpnessInstance inst =
      fcsf::make_sharpness_instance(left, right, w, budget_and_colors.budget, subset);

  std::ofstream out(output_path);
  if (!out) throw fcsf::ParseError("cannot write '" + output_path + "'");
  fcsf::write_graph(out, inst.graph, budget_and_colors.colors);
  out.close();

  long long subset_edges = 0;
  subset.for_each([&](fcsf::ColorId c) { subset_edges += inst.graph.multiplicity(c); });
  const long long threshold_numerator =
      static_cast<long long>(inst.block_order) * inst.block_order;
  const fcsf::Certificate cert =
      fcsf::check_forest_condition(inst.graph, budget_and_colors.budget, w);

  if (machine) {
    std::cout << "{\"subset_edges\":" << subset_edges
              << ",\"threshold\":" << format_quarter(threshold_numerator)
              << ",\"block_order\":" << inst.block_order << ",\"verdict\":\""
              << (cert.satisfied() ? "satisfied" : "violated") << "\",\"path\":"
              << "\"" << output_path << "\"}\n";
  } else {
    std::cout << "wrote " << output_path << '\n';
    std::cout << "subset edges: " << subset_edges << '\n';
    std::cout << "threshold: " << format_quarter(threshold_numerator) << " (= "
              << inst.block_order << "^2/4)\n";
    std::cout << "verdict: " << (cert.satisfied() ? "satisfied" : "violated") << '\n';
  }
  return cert.satisfied() ? 1 : 0;
}

struct CampaignFlags {
  long long trials = 1000;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  int max_vertices = 0;
  int max_colors = 0;
  int max_cap = -1;
  int max_w = 0;
  int max_part = 0;
  int jobs = 1;
  bool quiet = false;
};

int pick(int flag_value, int fallback) { return flag_value > 0 ? flag_value : fallback; }

int run_campaign(const std::string& mode, const CampaignFlags& flags) {
  const char* positive = mode == "iff-agreement" ? "satisfied" : "holds";
  const char* negative = mode == "iff-agreement" ? "violated" : "fails";
  fcsf::TrialSink sink;
  if (!flags.quiet)
    sink = [&](const fcsf::TrialRecord& r) {
      std::cout << r.seed << '\t' << r.n << '\t';
      if (r.m < 0)
        std::cout << '-';
      else
        std::cout << r.m;
      std::cout << '\t' << r.w << '\t' << (r.primary ? positive : negative) << '\t'
                << (r.forest_found ? "yes" : "no") << '\t' << (r.ok ? "ok" : "FAIL") << '\n';
    };

  long long trials = 0;
  long long failures = 0;
  const char* failure_word = "counterexamples";

  if (mode == "iff-agreement") {
    fcsf::InstanceFamily family;
    family.mode = flags.exhaustive ? fcsf::InstanceFamily::Mode::enumeration
                                   : fcsf::InstanceFamily::Mode::sampling;
    family.max_vertices = pick(flags.max_vertices, flags.exhaustive ? 4 : 8);
    family.max_colors = pick(flags.max_colors, flags.exhaustive ? 2 : 4);
    family.max_cap = flags.max_cap >= 0 ? flags.max_cap : (flags.exhaustive ? 2 : 3);
    family.max_w = pick(flags.max_w, 4);
    family.seed = flags.seed;
    family.trials = flags.trials;
    const fcsf::AgreementStats stats = fcsf::run_iff_agreement(family, sink, flags.jobs);
    trials = stats.trials;
    failures = stats.failures();
    failure_word = "disagreements";
  } else {
    if (flags.exhaustive)
      throw fcsf::InvalidArgumentError("--exhaustive only applies to iff-agreement");
    fcsf::PremiseCampaignConfig cfg;
    cfg.trials = flags.trials;
    cfg.seed = flags.seed;
    cfg.max_part = pick(flags.max_part, mode == "bh" ? 5 : 6);
    cfg.max_vertices = pick(flags.max_vertices, 8);
    cfg.max_colors = pick(flags.max_colors, 8);
    cfg.max_cap = flags.max_cap >= 0 ? flags.max_cap : 3;
    fcsf::PremiseStats stats;
    if (mode == "main-theorem")
      stats = fcsf::run_bipartite_premise_campaign(cfg, sink, flags.jobs);
    else if (mode == "bh")
      stats = fcsf::run_balanced_equivalence_campaign(cfg, sink, flags.jobs);
    else
      stats = fcsf::run_density_premise_campaign(cfg, sink, flags.jobs);
    trials = stats.trials;
    failures = stats.failures();
  }

  std::cout << "trials: " << trials << "  " << failure_word << ": " << failures << '\n';
  return failures == 0 ? 0 : 1;
}

int run_oracle_compare(const std::string& graph_path, const std::string& budget_path, int w,
                       bool machine) {
  const LoadedInstance in = load_instance(graph_path, budget_path);
  const fcsf::EdgeColoredGraph& g = in.parsed.graph;

  const fcsf::Certificate cert = fcsf::check_forest_condition(g, in.budget, w);
  const auto built = fcsf::build_forest(g, in.budget, w);
  const auto found = fcsf::brute_force_forest(g, in.budget, w);
  const bool agree = cert.satisfied() == found.has_value() &&
                     built.has_value() == cert.satisfied() &&
                     (!built || fcsf::validate_spanning_forest(g, *built, in.budget, w));

  if (machine) {
    std::cout << "{\"certifier\":\"" << (cert.satisfied() ? "satisfied" : "violated")
              << "\",\"builder\":\"" << (built ? "found" : "none") << "\",\"oracle\":\""
              << (found ? "found" : "none") << "\",\"agree\":" << (agree ? "true" : "false")
              << "}\n";
  } else {
    std::cout << "certifier: " << (cert.satisfied() ? "satisfied" : "violated") << '\n';
    std::cout << "builder: " << (built ? "found" : "none") << '\n';
    std::cout << "oracle: " << (found ? "found" : "none") << '\n';
    std::cout << "agreement: " << (agree ? "ok" : "FAIL") << '\n';
  }
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-chromatic spanning forests: decide, certify, construct, verify"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string budget_path;
  std::string output_path = "sharpness_instance.graph";
  std::string variant;
  std::string mode;
  std::vector<std::string> subset_names;
  int w = 1;
  int k = 0;
  int order = 0;
  int components = 0;
  int left = 0;
  int right = 0;
  int num_colors = 0;
  bool with_witness = false;
  bool machine = false;
  CampaignFlags campaign;

  CLI::App* check = app.add_subcommand("check", "decide forest existence, print a certificate");
  check->add_option("--graph", graph_path, "graph file")->required();
  check->add_option("--budget", budget_path, "per-color cap file (default: every cap 1)");
  check->add_option("-w", w, "component target (default 1)");
  check->add_option("-k", k, "instead: rainbow forest with exactly k edges (connected graphs)");
  check->add_flag("--witness", with_witness, "attach a witness forest when satisfied");
  check->add_flag("--machine", machine, "JSON output");

  CLI::App* construct = app.add_subcommand("construct", "build a forest within the caps");
  construct->add_option("--graph", graph_path, "graph file")->required();
  construct->add_option("--budget", budget_path, "per-color cap file (default: every cap 1)");
  construct->add_option("-w", w, "component target (default 1)");
  construct->add_flag("--machine", machine, "JSON output");

  CLI::App* theorem = app.add_subcommand("theorem", "check a sufficient-condition premise");
  theorem->add_option("variant", variant, "main | bh-prefix | bh-subset | su25 | lemma")
      ->required()
      ->check(CLI::IsMember({"main", "bh-prefix", "bh-subset", "su25", "lemma"}));
  theorem->add_option("--graph", graph_path, "graph file");
  theorem->add_option("--budget", budget_path, "per-color cap file (default: every cap 1)");
  theorem->add_option("-w", w, "component target (default 1)");
  theorem->add_option("-n", order, "lemma: graph order");
  theorem->add_option("-s,--components", components, "lemma: component count");
  theorem->add_flag("--machine", machine, "JSON output");

  CLI::App* sharpness =
      app.add_subcommand("sharpness", "generate an instance sitting exactly on the threshold");
  sharpness->add_option("-n", left, "left part size")->required();
  sharpness->add_option("-m", right, "right part size")->required();
  sharpness->add_option("-w", w, "component target (default 1)");
  sharpness->add_option("--budget", budget_path, "cap file defining the color set");
  sharpness->add_option("--num-colors", num_colors, "instead: that many colors, every cap 1");
  sharpness->add_option("--colors", subset_names, "comma-separated color subset")
      ->delimiter(',');
  sharpness->add_option("-o,--output", output_path,
                        "graph file to write (default sharpness_instance.graph)");
  sharpness->add_flag("--machine", machine, "JSON output");

  CLI::App* campaign_cmd = app.add_subcommand("campaign", "run a verification campaign");
  campaign_cmd->add_option("mode", mode, "iff-agreement | main-theorem | bh | su25")
      ->required()
      ->check(CLI::IsMember({"iff-agreement", "main-theorem", "bh", "su25"}));
  campaign_cmd->add_option("--trials", campaign.trials, "sampled trials (default 1000)");
  campaign_cmd->add_option("--seed", campaign.seed, "base seed (default 1)");
  campaign_cmd->add_flag("--exhaustive", campaign.exhaustive,
                         "iff-agreement: enumerate every instance in bounds");
  campaign_cmd->add_option("--max-vertices", campaign.max_vertices, "vertex bound");
  campaign_cmd->add_option("--max-colors", campaign.max_colors, "color bound");
  campaign_cmd->add_option("--max-cap", campaign.max_cap, "cap bound");
  campaign_cmd->add_option("--max-w", campaign.max_w, "component-target bound");
  campaign_cmd->add_option("--max-part", campaign.max_part, "bipartite part bound");
  campaign_cmd->add_option("--jobs", campaign.jobs, "parallel workers (default 1)");
  campaign_cmd->add_flag("--quiet", campaign.quiet, "suppress per-trial lines");

  CLI::App* compare =
      app.add_subcommand("oracle-compare", "certifier vs builder vs exhaustive search");
  compare->add_option("--graph", graph_path, "graph file")->required();
  compare->add_option("--budget", budget_path, "per-color cap file (default: every cap 1)");
  compare->add_option("-w", w, "component target (default 1)");
  compare->add_flag("--machine", machine, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(graph_path, budget_path, w, k, with_witness, machine);
    if (*construct) return run_construct(graph_path, budget_path, w, machine);
    if (*theorem)
      return run_theorem(variant, graph_path, budget_path, w, order, components, machine);
    if (*sharpness)
      return run_sharpness(left, right, w, budget_path, num_colors, subset_names, output_path,
                           machine);
    if (*campaign_cmd) return run_campaign(mode, campaign);
    if (*compare) return run_oracle_compare(graph_path, budget_path, w, machine);
  } catch (const fcsf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
