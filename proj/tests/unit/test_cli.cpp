#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cksrank/cli/commands.hpp"
#include "cksrank/cli/config.hpp"
#include "cksrank/errors.hpp"
#include "cksrank/stats.hpp"

using namespace cksrank;
using namespace cksrank::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("cksrank_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const fs::path& p) {
  std::string text = slurp(p);
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

ExperimentConfig small_config(const fs::path& out) {
  ExperimentConfig c;
  c.datasets.push_back(dataset_from_argument("ba:n=200,m=3,seed=4", false));
  c.replicates = 10;
  c.output_dir = out;
  c.timing = false;
  return c;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(CKSRANK_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config parsing, defaults and validation") {
  auto c = parse_config(R"({"datasets":[{"generator":"pcg","n":300,"m":3,"p":0.3,"seed":2}],
                             "methods":["CKS","bc"],"replicates":5,"master_seed":9})");
  REQUIRE(c.datasets.size() == 1);
  CHECK(c.datasets[0].name == "pcg");
  CHECK(c.methods == std::vector<Method>{Method::CKS, Method::BC});
  CHECK(c.replicates == 5);
  CHECK(c.master_seed == 9);
  CHECK(c.activation_probability == 0.1);
  CHECK(c.probabilities.size() == 9);
  CHECK_FALSE(c.fractions.has_value());
  c.validate();

  CHECK_THROWS_AS(parse_config("{not json"), ParseError);
  CHECK_THROWS_AS(parse_config(R"({"replicates":"many"})"), ParseError);
  CHECK_THROWS_AS(parse_config(R"({"methods":["PR"]})"), ParameterError);
  CHECK_THROWS_AS(ExperimentConfig{}.validate(), ParameterError);
  auto bad = c;
  bad.replicates = 0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = c;
  bad.probabilities = {0.1, 1.2};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = c;
  bad.methods.clear();
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("config hash ignores output location and worker count") {
  ExperimentConfig a = small_config("x");
  ExperimentConfig b = small_config("y");
  b.workers = 4;
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a).size() == 16);
  b.master_seed = 2;
  CHECK(config_hash(a) != config_hash(b));
  auto round = parse_config(canonical_config(a));
  CHECK(canonical_config(round) == canonical_config(a));
}

TEST_CASE("dataset arguments") {
  auto d = dataset_from_argument("pcg:n=50,m=2,p=0.5,seed=3", false);
  CHECK(d.generator == "pcg");
  CHECK(d.n == 50);
  CHECK(d.p == 0.5);
  CHECK(load_dataset(d).node_count() == 50);
  auto f = dataset_from_argument("data/wiki-vote.txt", true);
  CHECK(f.path == "data/wiki-vote.txt");
  CHECK(f.directed);
  CHECK(f.name == "wiki-vote");
  CHECK_THROWS_AS(dataset_from_argument("ba:n=x", false), ParameterError);
  CHECK(file_stem("a/b c") == "a_b_c");
}

TEST_CASE("rank writes one deterministic CSV per method") {
  auto dir = scratch("rank");
  auto c = small_config(dir);
  auto files = cmd_rank(c);
  REQUIRE(files.size() == 8);
  for (const auto& f : files) {
    CHECK(count_lines(f) == 201);
    CHECK(fs::exists(fs::path(f.string() + ".manifest.json")));
  }
  auto first = slurp(files[0]);
  cmd_rank(c);
  CHECK(slurp(files[0]) == first);
  auto manifest = nlohmann::json::parse(slurp(fs::path(files[0].string() + ".manifest.json")));
  CHECK(manifest["config_hash"] == config_hash(c));
  CHECK(manifest["master_seed"] == 1);
  CHECK(manifest.contains("rng"));

  c.datasets[0] = dataset_from_argument((dir / "missing.txt").string(), false);
  CHECK_THROWS_AS(cmd_rank(c), IoError);
}

TEST_CASE("experiment emits the protocol grids and a stats-ready matrix") {
  auto dir = scratch("experiment");
  auto c = small_config(dir);
  c.methods = {Method::CKS, Method::ENC, Method::BC};
  auto files = cmd_experiment(c);
  CHECK(count_lines(dir / "fig4_ba200.csv") == 1 + 3 * 9);
  CHECK(count_lines(dir / "fig5_ba200.csv") == 1 + 3 * 9);
  CHECK(count_lines(dir / "fig6_ba200.csv") == 1 + 3 * 9);
  CHECK_FALSE(fs::exists(dir / "fig7_ba200.csv"));
  std::ifstream in(dir / "result_matrix.csv");
  auto m = read_result_matrix_csv(in);
  CHECK(m.rows() == 9);
  CHECK(m.algorithms == std::vector<std::string>{"CKS", "ENC", "BC"});

  StatsRequest req;
  req.input = dir / "result_matrix.csv";
  req.output_dir = dir / "stats";
  auto stats_files = cmd_stats(req);
  CHECK(stats_files.size() == 3);
  CHECK(count_lines(dir / "stats" / "table3_holm.csv") == 3);
}

TEST_CASE("stats from an average-ranks file") {
  auto dir = scratch("stats");
  std::ofstream(dir / "ranks.csv") << "algorithm,avg_rank\nCKS,1.828\nBC,3.421\nDCL,3.500\nCC,4.476\n"
                                      "DIL,5.085\nLID,5.515\nGLR,5.789\nENC,6.382\n";
  StatsRequest req;
  req.input = dir / "ranks.csv";
  req.output_dir = dir;
  CHECK_THROWS_AS(cmd_stats(req), ParameterError);
  req.problems = 64;
  cmd_stats(req);
  auto holm = slurp(dir / "table3_holm.csv");
  CHECK(holm.find("ENC,-10.5") != std::string::npos);
  req.input = dir / "none.csv";
  CHECK_THROWS_AS(cmd_stats(req), IoError);
}

TEST_CASE("generate round-trips and is byte-stable") {
  auto dir = scratch("generate");
  GenerateRequest ba{"ba", 2000, 5, 0.0, 7, dir / "ba.txt"};
  cmd_generate(ba);
  auto bytes = slurp(dir / "ba.txt");
  cmd_generate(ba);
  CHECK(slurp(dir / "ba.txt") == bytes);
  Graph g = read_edge_list_file(dir / "ba.txt");
  CHECK(g.node_count() == 2000);
  CHECK(g.edge_count() == 9975);
  GenerateRequest pcg{"pcg", 2000, 5, 0.3, 7, dir / "pcg.txt"};
  cmd_generate(pcg);
  CHECK(read_edge_list_file(dir / "pcg.txt").node_count() == 2000);
  GenerateRequest bad{"er", 10, 2, 0.0, 1, dir / "er.txt"};
  CHECK_THROWS_AS(cmd_generate(bad), ParameterError);
}

TEST_CASE("summary") {
  ExperimentConfig c;
  c.datasets.push_back(dataset_from_argument("ba:n=100,m=2,seed=1,name=toy", false));
  std::ostringstream out;
  auto s = cmd_summary(c, false, out);
  CHECK(out.str() == "dataset,nodes,edges,communities\ntoy,100,196,\n");
  std::ostringstream with;
  cmd_summary(c, true, with);
  CHECK(with.str().find("toy,100,196,") != std::string::npos);
}

TEST_CASE("exit codes of the command-line tool") {
  auto dir = scratch("tool");
  const std::string out = (dir / "g.txt").string();
  CHECK(run_tool("generate ba --n 50 --m 2 --seed 3 --out " + out) == kExitOk);
  CHECK(run_tool("summary -i " + out) == kExitOk);
  CHECK(run_tool("rank -i " + out + " --methods CKS,DEG --out " + (dir / "r").string()) == kExitOk);
  CHECK(fs::exists(dir / "r" / "rank_g_DEG.csv"));
  CHECK(run_tool("rank -i " + (dir / "nope.txt").string()) == kExitIo);
  CHECK(run_tool("rank -i " + out + " --methods XYZ") == kExitValidation);
  CHECK(run_tool("experiment -i " + out + " --replicates 0") == kExitValidation);
  CHECK(run_tool("frobnicate") == kExitValidation);
  std::ofstream(dir / "bad.txt") << "1 2 3\n";
  CHECK(run_tool("summary -i " + (dir / "bad.txt").string()) == kExitValidation);
  std::ofstream(dir / "cfg.json") << "{\"datasets\":[{\"generator\":\"ba\",\"n\":60,\"m\":2,\"seed\":1}],"
                                     "\"methods\":[\"DEG\"],\"replicates\":3}";
  CHECK(run_tool("experiment --config " + (dir / "cfg.json").string() + " --no-timing --out " +
                 (dir / "e").string()) == kExitOk);
  CHECK(fs::exists(dir / "e" / "fig4_ba.csv"));
}
