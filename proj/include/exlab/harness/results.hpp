#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exlab/bounds.hpp"
#include "exlab/rational.hpp"

namespace exlab::harness {

// Error value with an exact rational form when one exists.
struct ErrorValue {
  std::optional<Rational> exact;
  double value = 0.0;

  static ErrorValue from_rational(Rational r) {
    ErrorValue v;
    v.value = to_double(r);
    v.exact = std::move(r);
    return v;
  }
  static ErrorValue from_double(double d) { return ErrorValue{std::nullopt, d}; }
};

struct ResultRecord {
  std::string suite;
  int n = 0;
  int m = 0;
  Rational gamma = 0;
  std::string strategy;
  std::optional<long> param_k, param_r, param_t;
  std::size_t cost = 0;
  ErrorValue worst_err;
  double mean_err = 0.0;
  std::vector<bounds::BoundReport> bound_values;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // not emitted; files must be byte-reproducible
};

bool same_record(const ResultRecord& a, const ResultRecord& b);

// Fixed columns: suite,n,m,gamma,strategy,param_k,param_r,param_t,cost,
// worst_err,mean_err,bound_name,bound_value,seed. One row per bound report
// (a single row with empty bound cells when there are none); rationals as
// "p/q".
std::string to_csv(const std::vector<ResultRecord>& records);

std::string to_json(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> from_json(const std::string& text);

// format: "csv" | "json".
void emit_file(const std::vector<ResultRecord>& records,
               const std::string& format, const std::string& path);

// Two-sided 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(long successes, long trials);

}  // namespace exlab::harness
