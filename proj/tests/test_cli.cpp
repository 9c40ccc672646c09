#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CommandResult {
  int status = -1;
  std::string out;
  std::string err;
};

const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d = std::filesystem::temp_directory_path() /
                              ("fcsf_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::filesystem::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CommandResult run_cli(const std::string& args) {
  const std::filesystem::path out_path = scratch_dir() / "stdout.txt";
  const std::filesystem::path err_path = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string("\"") + FCSF_CLI_PATH + "\" " + args + " > \"" +
                          out_path.string() + "\" 2> \"" + err_path.string() + "\"";
  const int raw = std::system(cmd.c_str());
  CommandResult result;
  if (raw != -1 && WIFEXITED(raw)) result.status = WEXITSTATUS(raw);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string rainbow_square_file() {
  return write_file("rainbow.graph",
                    "graph 4\n"
                    "edge 0 2 red\n"
                    "edge 0 3 red\n"
                    "edge 1 2 green\n"
                    "edge 1 3 blue\n");
}

std::string mono_square_file() {
  return write_file("mono.graph",
                    "graph 4\n"
                    "edge 0 2 ink\n"
                    "edge 0 3 ink\n"
                    "edge 1 2 ink\n"
                    "edge 1 3 ink\n");
}

std::string thin_k33_file() {
  return write_file("thin_k33.graph",
                    "graph 6\n"
                    "edge 0 3 a\n"
                    "edge 0 4 b\n"
                    "edge 0 5 c\n"
                    "edge 1 3 d\n"
                    "edge 1 4 e\n"
                    "edge 1 5 e\n"
                    "edge 2 3 e\n"
                    "edge 2 4 e\n"
                    "edge 2 5 e\n");
}

}  // namespace

TEST_CASE("check reports satisfaction with a verified witness") {
  const std::string graph = rainbow_square_file();
  const CommandResult plain = run_cli("check --graph " + graph);
  REQUIRE(plain.status == 0);
  REQUIRE(plain.out == "satisfied\n");

  const CommandResult witness = run_cli("check --graph " + graph + " --witness");
  REQUIRE(witness.status == 0);
  REQUIRE(witness.out ==
          "satisfied\n"
          "edge 0 2 red\n"
          "edge 1 2 green\n"
          "edge 1 3 blue\n"
          "witness check: 3 edges, valid\n");
}

TEST_CASE("check spells out a violation for rechecking by hand") {
  const CommandResult result = run_cli("check --graph " + mono_square_file());
  REQUIRE(result.status == 1);
  const std::vector<std::string> lines = lines_of(result.out);
  REQUIRE(lines.size() == 5);
  REQUIRE(lines[0] == "violated");
  REQUIRE(lines[1] == "violating colors: {ink}");
  REQUIRE(lines[2] == "components after removing them: 4");
  REQUIRE(lines[3] == "allowed: w (1) + caps in subset (1) = 2");
  REQUIRE(lines[4] == "recheck: 4 > 2 confirms the violation");
}

TEST_CASE("check emits machine-readable certificates") {
  const CommandResult bad = run_cli("check --machine --graph " + mono_square_file());
  REQUIRE(bad.status == 1);
  REQUIRE(bad.out ==
          "{\"verdict\":\"violated\",\"violating_colors\":[\"ink\"],"
          "\"omega\":4,\"bound\":2}\n");

  const CommandResult good =
      run_cli("check --machine --witness --graph " + rainbow_square_file());
  REQUIRE(good.status == 0);
  REQUIRE(good.out ==
          "{\"verdict\":\"satisfied\",\"witness_edges\":"
          "[[0,2,\"red\"],[1,2,\"green\"],[1,3,\"blue\"]]}\n");
}

TEST_CASE("check honors an explicit budget file") {
  const std::string graph = mono_square_file();
  const std::string caps = write_file("mono.budget", "cap ink 3\n");
  const CommandResult result = run_cli("check --graph " + graph + " --budget " + caps);
  REQUIRE(result.status == 0);
  REQUIRE(result.out == "satisfied\n");

  const std::string missing = write_file("empty.budget", "# nothing\n");
  const CommandResult bad = run_cli("check --graph " + graph + " --budget " + missing);
  REQUIRE(bad.status == 2);
  REQUIRE(bad.err.find("no cap for color 'ink'") != std::string::npos);
}

TEST_CASE("check counts rainbow forest edges with -k") {
  const std::string graph = rainbow_square_file();
  const CommandResult three = run_cli("check --graph " + graph + " -k 3");
  REQUIRE(three.status == 0);
  const std::string caps = write_file("rainbow.budget",
                                      "cap red 1\ncap green 1\ncap blue 1\n");
  const CommandResult clash =
      run_cli("check --graph " + graph + " -k 3 --budget " + caps);
  REQUIRE(clash.status == 2);
  REQUIRE(clash.err.find("error:") != std::string::npos);
}

TEST_CASE("parse diagnostics reach stderr with line numbers") {
  const std::string broken = write_file("broken.graph",
                                        "graph 3\n"
                                        "edge 0 9 a\n");
  const CommandResult result = run_cli("check --graph " + broken);
  REQUIRE(result.status == 2);
  REQUIRE(result.err.find("error:") != std::string::npos);
  REQUIRE(result.err.find("line 2") != std::string::npos);
}

TEST_CASE("construct prints the forest or a certified refusal") {
  const CommandResult built = run_cli("construct --graph " + rainbow_square_file());
  REQUIRE(built.status == 0);
  REQUIRE(built.out ==
          "edge 0 2 red\n"
          "edge 1 2 green\n"
          "edge 1 3 blue\n");

  const CommandResult empty = run_cli("construct -w 4 --graph " + rainbow_square_file());
  REQUIRE(empty.status == 0);
  REQUIRE(empty.out.empty());

  const CommandResult refused = run_cli("construct --graph " + mono_square_file());
  REQUIRE(refused.status == 1);
  REQUIRE(refused.out.find("no forest with 1 components fits the caps") != std::string::npos);
  REQUIRE(refused.out.find("violating colors: {ink}") != std::string::npos);

  const CommandResult machine =
      run_cli("construct --machine --graph " + rainbow_square_file());
  REQUIRE(machine.status == 0);
  REQUIRE(machine.out ==
          "{\"verdict\":\"satisfied\",\"witness_edges\":"
          "[[0,2,\"red\"],[1,2,\"green\"],[1,3,\"blue\"]]}\n");
}

TEST_CASE("theorem lemma prints the closed-form numbers") {
  const CommandResult result = run_cli("theorem lemma -n 7 -s 3");
  REQUIRE(result.status == 0);
  REQUIRE(result.out == "bound 6.25 exact 6\n");

  const CommandResult whole = run_cli("theorem lemma -n 6 -s 1");
  REQUIRE(whole.status == 0);
  REQUIRE(whole.out == "bound 9 exact 9\n");

  const CommandResult missing = run_cli("theorem lemma -n 7");
  REQUIRE(missing.status == 2);
}

TEST_CASE("theorem main reports its verdict and exit code") {
  const std::string holds = write_file("cozy.graph",
                                       "graph 4\n"
                                       "edge 0 2 a\n"
                                       "edge 0 3 b\n"
                                       "edge 1 2 b\n"
                                       "edge 1 3 c\n");
  const CommandResult ok = run_cli("theorem main --graph " + holds);
  REQUIRE(ok.status == 0);
  REQUIRE(ok.out == "holds\n");

  // A budget that cannot pay for the forest is a usage error, not a verdict.
  const CommandResult short_caps = run_cli("theorem main --graph " + mono_square_file());
  REQUIRE(short_caps.status == 2);
  REQUIRE(short_caps.err.find("error:") != std::string::npos);
}

TEST_CASE("theorem balanced forms fail with witnesses") {
  const std::string graph = thin_k33_file();
  const CommandResult subset = run_cli("theorem bh-subset --graph " + graph);
  REQUIRE(subset.status == 1);
  const std::vector<std::string> lines = lines_of(subset.out);
  REQUIRE(lines.size() >= 2);
  REQUIRE(lines[0] == "fails");
  REQUIRE(lines[1] == "violating colors: {a, b, c, d}");

  const CommandResult prefix = run_cli("theorem bh-prefix --graph " + graph);
  REQUIRE(prefix.status == 1);
  REQUIRE(prefix.out.find("fails\nviolating prefix length: 4\n") != std::string::npos);
}

TEST_CASE("theorem su25 separates the edge clause from color clauses") {
  const std::string sparse = write_file("sparse.graph",
                                        "graph 4\n"
                                        "edge 0 1 a\n"
                                        "edge 1 2 b\n"
                                        "edge 2 3 c\n");
  const CommandResult thin = run_cli("theorem su25 --graph " + sparse);
  REQUIRE(thin.status == 1);
  REQUIRE(lines_of(thin.out)[0] == "fails");

  const std::string dense = write_file("dense.graph",
                                       "graph 4\n"
                                       "edge 0 1 a\n"
                                       "edge 2 3 a\n"
                                       "edge 0 2 b\n"
                                       "edge 1 3 b\n"
                                       "edge 0 3 c\n"
                                       "edge 1 2 c\n");
  const CommandResult ok = run_cli("theorem su25 --graph " + dense);
  REQUIRE(ok.status == 0);
  REQUIRE(ok.out == "holds\n");
}

TEST_CASE("sharpness writes a threshold instance the checker rejects") {
  const std::string out_path = (scratch_dir() / "threshold.graph").string();
  const CommandResult made = run_cli("sharpness -n 3 -m 3 -w 1 --num-colors 5 "
                                     "--colors c1,c2,c3,c4 -o " +
                                     out_path);
  REQUIRE(made.status == 0);
  const std::vector<std::string> lines = lines_of(made.out);
  REQUIRE(lines.size() == 4);
  REQUIRE(lines[0] == "wrote " + out_path);
  REQUIRE(lines[1] == "subset edges: 4");
  REQUIRE(lines[2] == "threshold: 4 (= 4^2/4)");
  REQUIRE(lines[3] == "verdict: violated");

  const CommandResult checked = run_cli("check --graph " + out_path);
  REQUIRE(checked.status == 1);

  const CommandResult odd = run_cli("sharpness -n 2 -m 2 -w 2 --num-colors 3 "
                                    "--colors c1,c2 -o " +
                                    (scratch_dir() / "odd.graph").string());
  REQUIRE(odd.status == 2);
  REQUIRE(odd.err.find("error:") != std::string::npos);
}

TEST_CASE("exhaustive agreement campaign covers the tiny family exactly") {
  const CommandResult result = run_cli(
      "campaign iff-agreement --exhaustive --max-vertices 3 --max-colors 2 "
      "--max-cap 1 --max-w 1 --quiet");
  REQUIRE(result.status == 0);
  REQUIRE(result.out == "trials: 68  disagreements: 0\n");
}

TEST_CASE("sampled campaigns emit one row per trial plus a summary") {
  const CommandResult result = run_cli("campaign iff-agreement --trials 3 --seed 5");
  REQUIRE(result.status == 0);
  const std::vector<std::string> lines = lines_of(result.out);
  REQUIRE(lines.size() == 4);
  for (int i = 0; i < 3; ++i) {
    std::istringstream row(lines[static_cast<std::size_t>(i)]);
    std::vector<std::string> fields;
    for (std::string field; std::getline(row, field, '\t');) fields.push_back(field);
    REQUIRE(fields.size() == 7);
    REQUIRE(fields[2] == "-");
    REQUIRE((fields[4] == "satisfied" || fields[4] == "violated"));
    REQUIRE((fields[5] == "yes" || fields[5] == "no"));
    REQUIRE(fields[6] == "ok");
  }
  REQUIRE(lines[3] == "trials: 3  disagreements: 0");
}

TEST_CASE("premise campaigns count counterexamples") {
  const CommandResult main_mode = run_cli("campaign main-theorem --trials 100 --quiet");
  REQUIRE(main_mode.status == 0);
  REQUIRE(main_mode.out == "trials: 100  counterexamples: 0\n");

  const CommandResult bh = run_cli("campaign bh --trials 50 --quiet");
  REQUIRE(bh.status == 0);
  REQUIRE(bh.out == "trials: 50  counterexamples: 0\n");

  const CommandResult su = run_cli("campaign su25 --trials 50 --quiet");
  REQUIRE(su.status == 0);
  REQUIRE(su.out == "trials: 50  counterexamples: 0\n");

  const CommandResult none = run_cli("campaign main-theorem --trials 0 --quiet");
  REQUIRE(none.status == 0);
  REQUIRE(none.out == "trials: 0  counterexamples: 0\n");
}

TEST_CASE("campaign output is identical across runs and worker counts") {
  const std::string args = "campaign main-theorem --trials 20 --seed 7";
  const CommandResult first = run_cli(args);
  const CommandResult second = run_cli(args);
  REQUIRE(first.status == 0);
  REQUIRE(first.out == second.out);

  const CommandResult parallel = run_cli(args + " --jobs 3");
  REQUIRE(parallel.status == 0);
  REQUIRE(parallel.out == first.out);

  const CommandResult sampled_serial = run_cli("campaign iff-agreement --trials 30 --seed 9");
  const CommandResult sampled_parallel =
      run_cli("campaign iff-agreement --trials 30 --seed 9 --jobs 4");
  REQUIRE(sampled_serial.status == 0);
  REQUIRE(sampled_parallel.out == sampled_serial.out);

  const CommandResult exhaustive_flag = run_cli("campaign bh --exhaustive --trials 5");
  REQUIRE(exhaustive_flag.status == 2);
}

TEST_CASE("oracle comparison agrees on desk-scale instances") {
  const CommandResult pos = run_cli("oracle-compare --graph " + rainbow_square_file());
  REQUIRE(pos.status == 0);
  REQUIRE(pos.out ==
          "certifier: satisfied\n"
          "builder: found\n"
          "oracle: found\n"
          "agreement: ok\n");

  const CommandResult neg = run_cli("oracle-compare --graph " + mono_square_file());
  REQUIRE(neg.status == 0);
  REQUIRE(neg.out ==
          "certifier: violated\n"
          "builder: none\n"
          "oracle: none\n"
          "agreement: ok\n");
}

TEST_CASE("usage errors exit with code two") {
  REQUIRE(run_cli("--help").status == 0);
  REQUIRE(run_cli("").status == 2);
  REQUIRE(run_cli("check").status == 2);
  REQUIRE(run_cli("campaign bogus").status == 2);
  REQUIRE(run_cli("check --graph /nonexistent/g.graph").status == 2);
  REQUIRE(run_cli("frobnicate").status == 2);
}
