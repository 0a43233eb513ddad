#pragma once

#include "exlab/harness/config.hpp"
#include "exlab/harness/results.hpp"

namespace exlab::harness {

// Runs the strategy's exact per-pair error over every input pair.
ResultRecord exhaustive_check(const GameInstance& game, const Strategy& strat,
                              const Caps& caps = Caps::from_env());

// i.i.d. uniform input pairs; deterministic for a given seed. Empirical
// error plus its Wilson 95% interval (as bound reports).
ResultRecord sampled_check(const GameInstance& game, const Strategy& strat,
                           long trials, std::uint64_t seed,
                           const Caps& caps = Caps::from_env());

ResultRecord run_config(const ExperimentConfig& cfg,
                        const Caps& caps = Caps::from_env());

// One record per grid value, order-preserving; grid points run
// concurrently with per-point derived seeds.
std::vector<ResultRecord> sweep(const ExperimentConfig& cfg,
                                const Caps& caps = Caps::from_env());

}  // namespace exlab::harness
