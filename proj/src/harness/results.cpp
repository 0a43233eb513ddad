#include "exlab/harness/results.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exlab::harness {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string err_str(const ErrorValue& e) {
  return e.exact ? rational_str(*e.exact) : fmt_double(e.value);
}

json rational_json(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Rational rational_from_json(const json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()),
                  BigInt(j.at("den").get<std::string>()));
}

json opt_long_json(const std::optional<long>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

bool same_record(const ResultRecord& a, const ResultRecord& b) {
  if (a.suite != b.suite || a.n != b.n || a.m != b.m || a.gamma != b.gamma ||
      a.strategy != b.strategy || a.param_k != b.param_k ||
      a.param_r != b.param_r || a.param_t != b.param_t || a.cost != b.cost ||
      a.mean_err != b.mean_err || a.seed != b.seed ||
      a.worst_err.value != b.worst_err.value ||
      a.worst_err.exact != b.worst_err.exact ||
      a.bound_values.size() != b.bound_values.size())
    return false;
  for (std::size_t i = 0; i < a.bound_values.size(); ++i) {
    const auto& x = a.bound_values[i];
    const auto& y = b.bound_values[i];
    if (x.name != y.name || x.value != y.value || x.exact != y.exact)
      return false;
  }
  return true;
}

std::string to_csv(const std::vector<ResultRecord>& records) {
  std::ostringstream out;
  out << "suite,n,m,gamma,strategy,param_k,param_r,param_t,cost,worst_err,"
         "mean_err,bound_name,bound_value,seed\n";
  for (const auto& rec : records) {
    const auto row_prefix = [&](std::ostringstream& os) {
      os << rec.suite << ',' << rec.n << ',' << rec.m << ','
         << rational_str(rec.gamma) << ',' << rec.strategy << ',';
      if (rec.param_k) os << *rec.param_k;
      os << ',';
      if (rec.param_r) os << *rec.param_r;
      os << ',';
      if (rec.param_t) os << *rec.param_t;
      os << ',' << rec.cost << ',' << err_str(rec.worst_err) << ','
         << fmt_double(rec.mean_err) << ',';
    };
    if (rec.bound_values.empty()) {
      row_prefix(out);
      out << ",," << rec.seed << '\n';
      continue;
    }
    for (const auto& b : rec.bound_values) {
      row_prefix(out);
      out << b.name << ','
          << (b.exact ? rational_str(*b.exact) : fmt_double(b.value)) << ','
          << rec.seed << '\n';
    }
  }
  return out.str();
}

std::string to_json(const std::vector<ResultRecord>& records) {
  json arr = json::array();
  for (const auto& rec : records) {
    json jb = json::array();
    for (const auto& b : rec.bound_values) {
      json e{{"name", b.name}, {"value", b.value}, {"inputs", b.inputs}};
      e["exact"] = b.exact ? rational_json(*b.exact) : json(nullptr);
      jb.push_back(std::move(e));
    }
    json w;
    if (rec.worst_err.exact)
      w = rational_json(*rec.worst_err.exact);
    else
      w = rec.worst_err.value;
    arr.push_back(json{{"suite", rec.suite},
                       {"n", rec.n},
                       {"m", rec.m},
                       {"gamma", rational_json(rec.gamma)},
                       {"strategy", rec.strategy},
                       {"param_k", opt_long_json(rec.param_k)},
                       {"param_r", opt_long_json(rec.param_r)},
                       {"param_t", opt_long_json(rec.param_t)},
                       {"cost", rec.cost},
                       {"worst_err", std::move(w)},
                       {"mean_err", rec.mean_err},
                       {"bounds", std::move(jb)},
                       {"seed", rec.seed}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ResultRecord> from_json(const std::string& text) {
  const json arr = json::parse(text);
  std::vector<ResultRecord> out;
  for (const auto& j : arr) {
    ResultRecord rec;
    rec.suite = j.at("suite").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.m = j.at("m").get<int>();
    rec.gamma = rational_from_json(j.at("gamma"));
    rec.strategy = j.at("strategy").get<std::string>();
    const std::pair<const char*, std::optional<long>*> params[] = {
        {"param_k", &rec.param_k},
        {"param_r", &rec.param_r},
        {"param_t", &rec.param_t}};
    for (auto [key, dst] : params)
      if (!j.at(key).is_null()) *dst = j.at(key).get<long>();
    rec.cost = j.at("cost").get<std::size_t>();
    if (j.at("worst_err").is_object())
      rec.worst_err = ErrorValue::from_rational(rational_from_json(j.at("worst_err")));
    else
      rec.worst_err = ErrorValue::from_double(j.at("worst_err").get<double>());
    rec.mean_err = j.at("mean_err").get<double>();
    for (const auto& b : j.at("bounds")) {
      bounds::BoundReport br;
      br.name = b.at("name").get<std::string>();
      br.value = b.at("value").get<double>();
      br.inputs = b.value("inputs", std::string());
      if (!b.at("exact").is_null()) br.exact = rational_from_json(b.at("exact"));
      rec.bound_values.push_back(std::move(br));
    }
    rec.seed = j.at("seed").get<std::uint64_t>();
    out.push_back(std::move(rec));
  }
  return out;
}

void emit_file(const std::vector<ResultRecord>& records,
               const std::string& format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << (format == "json" ? to_json(records) : to_csv(records));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::pair<double, double> wilson_interval(long successes, long trials) {
  if (trials < 1) throw std::invalid_argument("wilson: trials >= 1");
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace exlab::harness
