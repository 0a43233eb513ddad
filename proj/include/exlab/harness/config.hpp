#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exlab/game.hpp"
#include "exlab/protocols.hpp"

namespace exlab::harness {

// Exhaustive caps. Classical-strategy enumeration tolerates two more
// qubits than quantum state simulation.
struct Caps {
  int quantum = 10;
  int classical = 12;

  // EXLAB_MAX_QUBITS overrides the quantum cap (classical follows at +2).
  static Caps from_env();
  Caps with_quantum(int q) const { return Caps{q, q + 2}; }
};

struct ExperimentConfig {
  std::string suite = "exhaustive";  // exhaustive | sampled
  int n = 1;
  int m = 1;
  Rational gamma = 0;
  std::string strategy = "pjo";
  StrategyParams params;
  long trials = 1000;
  std::uint64_t seed = 0;
  std::string output_path;
  std::string format = "csv";  // csv | json

  // One varying parameter for sweeps: n, m, k, r, t or trials.
  std::string sweep_parameter;
  std::vector<long> sweep_values;

  GameInstance game() const { return GameInstance(n, m, gamma); }

  // Builds the strategy once to surface bad parameter combinations before
  // any run.
  void validate() const;

  static ExperimentConfig load(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

}  // namespace exlab::harness
