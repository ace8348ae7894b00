#include "hb/records.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace hb {

ResultRecord make_record(const std::string& digest, const PointSet& P, std::size_t k, std::uint64_t seed,
                         const TuningParams& params, Solution solution) {
  ResultRecord r;
  r.digest = digest;
  r.n = P.size();
  r.k = k;
  r.seed = seed;
  r.params = params;
  for (std::size_t i : solution.subset) r.subset_coords.push_back({P[i].x().str(), P[i].y().str()});
  r.solution = std::move(solution);
  return r;
}

std::string to_json_line(const ResultRecord& record) {
  using nlohmann::ordered_json;
  const Solution& s = record.solution;
  const RunStats& st = s.stats;

  ordered_json params;
  params["c"] = record.params.sample_constant;
  params["t"] = st.t;
  params["t_override"] = record.params.t_override.has_value();
  params["cap_constant"] = record.params.stage3_cap_constant;
  params["instrumentation"] = record.params.instrumentation;

  ordered_json stats;
  stats["decider_calls"] = st.decider_calls;
  stats["stage1_calls"] = st.stage_calls[1];
  stats["stage2_calls"] = st.stage_calls[2];
  stats["stage3_calls"] = st.stage_calls[3];
  stats["stage1_steps"] = st.stage1_steps;
  stats["stage2_steps"] = st.stage2_steps;
  stats["m"] = st.sample_bag_size;
  stats["U"] = st.candidate_count;
  stats["U_distinct"] = st.candidate_distinct;
  stats["X"] = st.peel_iterations;
  stats["alpha_fallbacks"] = st.alpha_fallbacks;
  stats["alpha_equals_high"] = st.alpha_equals_high;
  stats["open_calls_derived"] = st.open_calls_derived;
  stats["cached_verdicts"] = st.cached_verdicts;
  stats["iteration_cap"] = st.iteration_cap;
  stats["fallback"] = st.fallback;
  stats["finished_in"] = to_string(st.finished_in);
  if (record.params.instrumentation) {
    stats["alpha_mismatches"] = st.alpha_mismatches;
    stats["invariant_checks"] = st.invariant_checks;
  }

  ordered_json points = ordered_json::array();
  for (const auto& [x, y] : record.subset_coords) points.push_back({x, y});

  ordered_json j;
  j["digest"] = record.digest;
  j["n"] = record.n;
  j["k"] = record.k;
  j["seed"] = record.seed;
  j["params"] = params;
  j["ropt_sq"] = {{"num", s.ropt_sq.numerator().str()}, {"den", s.ropt_sq.denominator().str()}};
  j["ropt_float"] = s.ropt_float;
  j["subset"] = s.subset;
  j["subset_points"] = points;
  j["stats"] = stats;
  j["verification"] = record.verification;
  return j.dump();
}

std::string csv_header() {
  return "shape,n,k,seed,ropt_num,ropt_den,ropt_float,t,m,U,X,gap_bound,stage1_calls,stage2_calls,stage3_calls,"
         "decider_calls,alpha_fallbacks,alpha_equals_high,fallback,finished_in,prepare_s,stage1_s,stage2_s,stage3_s,"
         "baseline_calls,canonical_size,baseline_s";
}

std::string to_csv_row(const ResultRecord& record, const std::string& shape, std::size_t baseline_calls,
                       std::size_t canonical_size, double baseline_seconds) {
  const Solution& s = record.solution;
  const RunStats& st = s.stats;
  std::ostringstream out;
  out.precision(6);
  out << shape << ',' << record.n << ',' << record.k << ',' << record.seed << ',' << s.ropt_sq.numerator() << ','
      << s.ropt_sq.denominator() << ',' << s.ropt_float << ',' << st.t << ',' << st.sample_bag_size << ','
      << st.candidate_count << ',' << st.peel_iterations << ','
      << record.params.sample_constant * static_cast<double>(record.n) / st.t << ',' << st.stage_calls[1] << ','
      << st.stage_calls[2] << ',' << st.stage_calls[3] << ',' << st.decider_calls << ',' << st.alpha_fallbacks << ','
      << st.alpha_equals_high << ',' << (st.fallback ? 1 : 0) << ',' << to_string(st.finished_in) << ','
      << st.stage_seconds[0] << ',' << st.stage_seconds[1] << ',' << st.stage_seconds[2] << ','
      << st.stage_seconds[3] << ',';
  if (canonical_size > 0) out << baseline_calls << ',' << canonical_size << ',' << baseline_seconds;
  else out << ",,";
  return out.str();
}

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = std::min(xs.size(), ys.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(xs[i]);
    const double y = std::log(ys[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
}

}  // namespace hb
