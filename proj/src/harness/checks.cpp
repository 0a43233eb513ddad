#include "exlab/harness/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

#include "exlab/rng.hpp"

namespace exlab::harness {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void check_cap(const GameInstance& game, const Strategy& strat,
               const Caps& caps) {
  const Message probe = strat.encode(BitString(0, game.n));
  const int cap = probe.quantum ? caps.quantum : caps.classical;
  if (game.n > cap)
    throw std::invalid_argument(
        "n exceeds the exhaustive cap for this strategy; use sampled mode or "
        "raise EXLAB_MAX_QUBITS");
}

// Bound reports relevant to the strategy, for the emitted record.
void attach_bounds(ResultRecord& rec, const GameInstance& game,
                   const std::string& name) {
  const int n = game.n, m = game.m;
  if (name == "pjo") {
    rec.bound_values.push_back(
        {"info_cost_bound", bounds::pjo_info_cost_bound(n, m), std::nullopt,
         "2 n h(sin^2(theta_m/2))"});
  } else if (name == "compressed_pjo" && rec.param_k) {
    const int k = static_cast<int>(*rec.param_k);
    rec.bound_values.push_back({"eps_k_exact",
                                bounds::compression_error_exact(n, m, k),
                                std::nullopt, "closed form"});
    rec.bound_values.push_back({"eps_k_bound",
                                bounds::compression_error_bound(n, m, k),
                                std::nullopt, "sqrt(1 - A_k)"});
    rec.bound_values.push_back({"qubits_log2",
                                bounds::compressed_qubits(n, k).log2_count,
                                std::nullopt, "unrounded message size"});
  } else if (name == "majority") {
    const Rational exact = bounds::majority_error_exact(n, m);
    rec.bound_values.push_back(
        {"majority_eps_formula", to_double(exact), exact, "formula"});
    if (n <= 14) {
      const Rational en = bounds::majority_error_enumerated(n, m);
      rec.bound_values.push_back(
          {"majority_eps_enumerated", to_double(en), en, "pair count"});
    }
  } else if (name == "random_guess") {
    const Rational exact(1, BigInt(1) << m);
    rec.bound_values.push_back(
        {"guess_error", to_double(exact), exact, "2^-m"});
  }
}

ResultRecord base_record(const GameInstance& game, const Strategy& strat,
                         const StrategyParams* params) {
  ResultRecord rec;
  rec.n = game.n;
  rec.m = game.m;
  rec.gamma = game.gamma;
  rec.strategy = strat.name();
  rec.cost = strat.cost(game.n);
  if (params) {
    rec.param_k = params->k;
    rec.param_r = params->r;
    rec.param_t = params->t;
  }
  return rec;
}

}  // namespace

ResultRecord exhaustive_check(const GameInstance& game, const Strategy& strat,
                              const Caps& caps) {
  const auto t0 = std::chrono::steady_clock::now();
  check_cap(game, strat, caps);

  ResultRecord rec = base_record(game, strat, nullptr);
  rec.suite = "exhaustive";

  double worst = 0.0, sum = 0.0;
  std::uint64_t pairs = 0, err_pairs = 0;
  bool all_zero_one = true;
  for_each_input(
      game.n, game.m,
      [&](const InputPair& p) {
        const auto err = strat.error_probability(p.x, p.y);
        if (!err)
          throw std::invalid_argument(
              "strategy has no exact per-pair error; use sampled mode");
        worst = std::max(worst, *err);
        sum += *err;
        ++pairs;
        if (*err == 1.0)
          ++err_pairs;
        else if (*err != 0.0)
          all_zero_one = false;
      },
      std::max(caps.classical, game.n));

  rec.mean_err = sum / static_cast<double>(pairs);
  if (all_zero_one) {
    // Deterministic strategy: the worst case and the mean are exact.
    rec.worst_err = ErrorValue::from_rational(Rational(err_pairs > 0 ? 1 : 0));
    rec.bound_values.push_back(
        {"mean_err_exact",
         to_double(Rational(BigInt(err_pairs), BigInt(pairs))),
         Rational(BigInt(err_pairs), BigInt(pairs)), "error pairs / pairs"});
  } else {
    rec.worst_err = ErrorValue::from_double(worst);
  }
  attach_bounds(rec, game, strat.name());
  rec.wall_time = seconds_since(t0);
  return rec;
}

ResultRecord sampled_check(const GameInstance& game, const Strategy& strat,
                           long trials, std::uint64_t seed, const Caps&) {
  if (trials < 1) throw std::invalid_argument("need trials >= 1");
  const auto t0 = std::chrono::steady_clock::now();

  ResultRecord rec = base_record(game, strat, nullptr);
  rec.suite = "sampled";
  rec.seed = seed;

  Rng rng(seed);
  long losses = 0;
  for (long i = 0; i < trials; ++i) {
    InputPair p;
    p.x = BitString(rng.bits(game.n), game.n);
    // Uniform m-subset: partial Fisher-Yates over 1..n.
    std::vector<int> pool(static_cast<std::size_t>(game.n));
    for (int q = 1; q <= game.n; ++q) pool[static_cast<std::size_t>(q - 1)] = q;
    for (int j = 0; j < game.m; ++j) {
      const auto pick =
          j + static_cast<int>(rng.next_u64() %
                               static_cast<std::uint64_t>(game.n - j));
      std::swap(pool[static_cast<std::size_t>(j)],
                pool[static_cast<std::size_t>(pick)]);
    }
    pool.resize(static_cast<std::size_t>(game.m));
    std::sort(pool.begin(), pool.end());
    p.y = std::move(pool);
    if (!strat.run(p, rng).won) ++losses;
  }

  rec.mean_err = static_cast<double>(losses) / static_cast<double>(trials);
  const auto [lo, hi] = wilson_interval(losses, trials);
  rec.worst_err = ErrorValue::from_double(hi);
  rec.bound_values.push_back({"wilson_low", lo, std::nullopt, "95% interval"});
  rec.bound_values.push_back({"wilson_high", hi, std::nullopt, "95% interval"});
  attach_bounds(rec, game, strat.name());
  rec.wall_time = seconds_since(t0);
  return rec;
}

ResultRecord run_config(const ExperimentConfig& cfg, const Caps& caps) {
  cfg.validate();
  const GameInstance game = cfg.game();
  const auto strat = make_strategy(cfg.strategy, game, cfg.params);
  ResultRecord rec = cfg.suite == "sampled"
                         ? sampled_check(game, *strat, cfg.trials, cfg.seed, caps)
                         : exhaustive_check(game, *strat, caps);
  rec.param_k = cfg.params.k;
  rec.param_r = cfg.params.r;
  rec.param_t = cfg.params.t;
  if (cfg.suite != "sampled") rec.seed = cfg.seed;
  return rec;
}

std::vector<ResultRecord> sweep(const ExperimentConfig& cfg, const Caps& caps) {
  cfg.validate();
  if (cfg.sweep_parameter.empty() || cfg.sweep_values.empty())
    throw std::invalid_argument("sweep needs a parameter grid");

  std::vector<ExperimentConfig> grid;
  for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i) {
    ExperimentConfig point = cfg;
    const long v = cfg.sweep_values[i];
    point.sweep_parameter.clear();
    point.sweep_values.clear();
    if (cfg.sweep_parameter == "n")
      point.n = static_cast<int>(v);
    else if (cfg.sweep_parameter == "m")
      point.m = static_cast<int>(v);
    else if (cfg.sweep_parameter == "k")
      point.params.k = v;
    else if (cfg.sweep_parameter == "r")
      point.params.r = v;
    else if (cfg.sweep_parameter == "t")
      point.params.t = v;
    else if (cfg.sweep_parameter == "trials")
      point.trials = v;
    else
      throw std::invalid_argument("unknown sweep parameter: " +
                                  cfg.sweep_parameter);
    point.seed = Rng::mix(cfg.seed, i);
    point.validate();
    grid.push_back(std::move(point));
  }

  std::vector<std::future<ResultRecord>> futures;
  futures.reserve(grid.size());
  for (const auto& point : grid)
    futures.push_back(std::async(std::launch::async,
                                 [&caps, point] { return run_config(point, caps); }));

  std::vector<ResultRecord> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < futures.size(); ++i) {
    ResultRecord rec = futures[i].get();
    rec.suite = "sweep:" + cfg.sweep_parameter;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace exlab::harness
