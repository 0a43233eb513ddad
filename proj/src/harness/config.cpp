#include "exlab/harness/config.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exlab::harness {

using nlohmann::json;

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("EXLAB_MAX_QUBITS")) {
    const int q = std::atoi(env);
    if (q >= 1) caps = caps.with_quantum(q);
  }
  return caps;
}

void ExperimentConfig::validate() const {
  if (suite != "exhaustive" && suite != "sampled")
    throw std::invalid_argument("suite must be exhaustive or sampled");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be csv or json");
  if (suite == "sampled" && trials < 1)
    throw std::invalid_argument("need trials >= 1");
  if (!sweep_parameter.empty() && sweep_values.empty())
    throw std::invalid_argument("sweep grid is empty");
  (void)make_strategy(strategy, game(), params);  // rejects bad parameters
}

static std::optional<long> opt_long(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<long>();
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig cfg;
  cfg.suite = j.value("suite", std::string("exhaustive"));
  const json& g = j.at("game");
  cfg.n = g.at("n").get<int>();
  cfg.m = g.at("m").get<int>();
  if (g.contains("gamma")) cfg.gamma = parse_rational(g["gamma"].get<std::string>());
  const json& s = j.at("strategy");
  cfg.strategy = s.at("name").get<std::string>();
  cfg.params.k = opt_long(s, "k");
  cfg.params.r = opt_long(s, "r");
  cfg.params.t = opt_long(s, "t");
  cfg.params.gamma = cfg.gamma;
  cfg.trials = j.value("trials", 1000L);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.output_path = j.value("output_path", std::string());
  cfg.format = j.value("format", std::string("csv"));
  if (j.contains("sweep")) {
    cfg.sweep_parameter = j["sweep"].at("parameter").get<std::string>();
    cfg.sweep_values = j["sweep"].at("values").get<std::vector<long>>();
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
  json s{{"name", strategy}};
  if (params.k) s["k"] = *params.k;
  if (params.r) s["r"] = *params.r;
  if (params.t) s["t"] = *params.t;
  json j{{"suite", suite},
         {"game", {{"n", n}, {"m", m}, {"gamma", rational_str(gamma)}}},
         {"strategy", s},
         {"trials", trials},
         {"seed", seed},
         {"format", format}};
  if (!output_path.empty()) j["output_path"] = output_path;
  if (!sweep_parameter.empty())
    j["sweep"] = {{"parameter", sweep_parameter}, {"values", sweep_values}};
  return j.dump(2) + "\n";
}

}  // namespace exlab::harness
