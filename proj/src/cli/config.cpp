#include "cksrank/cli/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cksrank/errors.hpp"
#include "cksrank/experiments.hpp"
#include "cksrank/generators.hpp"

namespace cksrank::cli {

using json = nlohmann::ordered_json;

ExperimentConfig::ExperimentConfig()
    : probabilities(std::begin(kProbabilityGrid), std::end(kProbabilityGrid)),
      sweep_fraction(kDefaultSweepFraction),
      activation_probability(kDefaultActivation),
      replicates(kDefaultReplicates) {}

void ExperimentConfig::validate() const {
  if (datasets.empty()) throw ParameterError("config names no dataset");
  if (methods.empty()) throw ParameterError("config names no method");
  if (replicates < 1) throw ParameterError("replicates must be >= 1");
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(activation_probability)) throw ParameterError("activation_probability must lie in [0, 1]");
  if (!(sweep_fraction > 0.0 && sweep_fraction <= 1.0)) {
    throw ParameterError("sweep_fraction must lie in (0, 1]");
  }
  for (double p : probabilities) {
    if (!in_unit(p)) throw ParameterError("probabilities must lie in [0, 1]");
  }
  if (fractions) {
    if (fractions->empty()) throw ParameterError("fractions must not be empty");
    for (double f : *fractions) {
      if (!(f > 0.0 && f <= 1.0)) throw ParameterError("fractions must lie in (0, 1]");
    }
  }
  for (const auto& d : datasets) {
    if (d.name.empty()) throw ParameterError("every dataset needs a name");
    if (d.synthetic()) {
      if (d.generator != "ba" && d.generator != "pcg") {
        throw ParameterError("dataset '" + d.name + "': unknown generator '" + d.generator + "'");
      }
    } else if (d.path.empty()) {
      throw ParameterError("dataset '" + d.name + "' needs a path or a generator");
    }
  }
}

namespace {

DatasetSpec dataset_from_json(const json& j) {
  DatasetSpec d;
  d.name = j.value("name", "");
  if (j.contains("path")) d.path = j.at("path").get<std::string>();
  d.directed = j.value("directed", false);
  d.generator = j.value("generator", "");
  d.n = j.value("n", std::size_t{0});
  d.m = j.value("m", std::size_t{0});
  d.p = j.value("p", 0.0);
  d.seed = j.value("seed", std::uint64_t{0});
  if (d.name.empty()) d.name = d.synthetic() ? d.generator : d.path.stem().string();
  return d;
}

json dataset_to_json(const DatasetSpec& d) {
  json j;
  j["name"] = d.name;
  if (d.synthetic()) {
    j["generator"] = d.generator;
    j["n"] = d.n;
    j["m"] = d.m;
    if (d.generator == "pcg") j["p"] = d.p;
    j["seed"] = d.seed;
  } else {
    j["path"] = d.path.string();
    j["directed"] = d.directed;
  }
  return j;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what(), 0);
  }
  ExperimentConfig c;
  try {
    if (j.contains("datasets")) {
      for (const auto& d : j.at("datasets")) c.datasets.push_back(dataset_from_json(d));
    }
    if (j.contains("methods")) {
      c.methods.clear();
      for (const auto& m : j.at("methods")) {
        auto method = parse_method(m.get<std::string>());
        if (!method) throw ParameterError("unknown method '" + m.get<std::string>() + "'");
        c.methods.push_back(*method);
      }
    }
    if (j.contains("fractions") && !j.at("fractions").is_null()) {
      c.fractions = j.at("fractions").get<std::vector<double>>();
    }
    if (j.contains("probabilities")) c.probabilities = j.at("probabilities").get<std::vector<double>>();
    c.sweep_fraction = j.value("sweep_fraction", c.sweep_fraction);
    c.activation_probability = j.value("activation_probability", c.activation_probability);
    c.replicates = j.value("replicates", c.replicates);
    c.master_seed = j.value("master_seed", c.master_seed);
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    c.workers = j.value("workers", c.workers);
    c.timing = j.value("timing", c.timing);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config field has the wrong type: ") + e.what(), 0);
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string canonical_config(const ExperimentConfig& config) {
  json j;
  j["datasets"] = json::array();
  for (const auto& d : config.datasets) j["datasets"].push_back(dataset_to_json(d));
  j["methods"] = json::array();
  for (Method m : config.methods) j["methods"].push_back(std::string(method_name(m)));
  j["fractions"] = config.fractions ? json(*config.fractions) : json(nullptr);
  j["probabilities"] = config.probabilities;
  j["sweep_fraction"] = config.sweep_fraction;
  j["activation_probability"] = config.activation_probability;
  j["replicates"] = config.replicates;
  j["master_seed"] = config.master_seed;
  return j.dump();
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_config(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

DatasetSpec dataset_from_argument(const std::string& text, bool directed) {
  auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (colon == std::string::npos || (head != "ba" && head != "pcg")) {
    DatasetSpec d;
    d.path = text;
    d.directed = directed;
    d.name = d.path.stem().string();
    return d;
  }
  DatasetSpec d;
  d.generator = head;
  std::stringstream params(text.substr(colon + 1));
  std::string item;
  while (std::getline(params, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("generator parameter '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "n") d.n = std::stoull(value);
      else if (key == "m") d.m = std::stoull(value);
      else if (key == "p") d.p = std::stod(value);
      else if (key == "seed") d.seed = std::stoull(value);
      else if (key == "name") d.name = value;
      else throw ParameterError("unknown generator parameter '" + key + "'");
    } catch (const std::logic_error&) {
      throw ParameterError("bad value for generator parameter '" + key + "'");
    }
  }
  if (d.name.empty()) d.name = head + std::to_string(d.n);
  return d;
}

Graph load_dataset(const DatasetSpec& spec) {
  if (spec.generator == "ba") return generate_ba(spec.n, spec.m, spec.seed);
  if (spec.generator == "pcg") return generate_powerlaw_cluster(spec.n, spec.m, spec.p, spec.seed);
  if (spec.synthetic()) throw ParameterError("unknown generator '" + spec.generator + "'");
  return read_edge_list_file(spec.path, spec.directed);
}

}  // namespace cksrank::cli
