#pragma once

#include <string>
#include <vector>

#include "hb/search_engine.hpp"

namespace hb {

/// Everything needed to reproduce one solve: rerunning solve on the instance with the
/// recorded k, params and seed yields the same record. Wall times are left out so
/// that records compare byte for byte.
struct ResultRecord {
  std::string digest;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  TuningParams params;
  Solution solution;
  std::vector<std::pair<std::string, std::string>> subset_coords;
  std::string verification = "unverified";
};

ResultRecord make_record(const std::string& digest, const PointSet& P, std::size_t k, std::uint64_t seed,
                         const TuningParams& params, Solution solution);

std::string to_json_line(const ResultRecord& record);

std::string csv_header();
/// One CSV row including wall times; the baseline columns are left empty when absent.
std::string to_csv_row(const ResultRecord& record, const std::string& shape, std::size_t baseline_calls,
                       std::size_t canonical_size, double baseline_seconds);

double median(std::vector<double> values);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace hb
