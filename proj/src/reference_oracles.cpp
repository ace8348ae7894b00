#include "hb/reference_oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "hb/hausdorff_metrics.hpp"

namespace hb {
namespace {

void certify_subset(const PointSet& P, std::size_t k, OracleReport& report) {
  if (report.subset.empty() || report.subset.size() > k)
    throw InvariantViolation("oracle subset size outside [1, k]");
  if (hausdorff_sq(P, report.subset).value_sq != report.ropt_sq)
    throw InvariantViolation("oracle subset does not realize the reported value");
  report.checked_invariants.push_back("subset realizes ropt");
}

}  // namespace

const char* to_string(OracleMethod method) {
  return method == OracleMethod::BruteForce ? "brute_force" : "canonical_binary_search";
}

OracleReport brute_solve(const PointSet& P, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (P.size() > kBruteSolveMaxPoints) throw std::invalid_argument("brute_solve is limited to 14 points");
  const ExhaustiveTable table(P);
  OracleReport report;
  report.method = OracleMethod::BruteForce;
  const std::size_t limit = std::min(k, table.max_size());
  for (std::size_t c = 1; c <= limit; ++c) {
    const auto& best = table.best(c);
    if (best && (report.subset.empty() || best->value_sq < report.ropt_sq)) {
      report.ropt_sq = best->value_sq;
      report.subset = best->subset;
    }
  }
  certify_subset(P, k, report);
  return report;
}

OracleReport baseline_solve(const PointSet& P, std::size_t k) {
  const SweepDecider decider(P);
  const ExtremalIndex idx(P);
  return baseline_solve(decider, idx, k);
}

OracleReport baseline_solve(const Decider& decider, const ExtremalIndex& idx, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const PointSet& P = decider.points();
  OracleReport report;
  report.method = OracleMethod::CanonicalBinarySearch;

  if (idx.hull_size() <= k) {
    for (const Point& v : idx.hull().vertices()) report.subset.push_back(v.index());
    std::sort(report.subset.begin(), report.subset.end());
    certify_subset(P, k, report);
    return report;
  }

  const CanonicalTable table(P, idx);
  report.canonical_size = table.size();
  std::size_t lo = 0;
  std::size_t hi = table.size();
  DeciderVerdict found;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    DeciderVerdict v = decider.decide(Threshold::closed(table.value(mid)), k);
    ++report.decide_calls;
    if (v.feasible) {
      hi = mid;
      found = std::move(v);
    } else {
      lo = mid + 1;
    }
  }
  if (lo == table.size()) throw InvariantViolation("no canonical value is feasible");
  report.ropt_sq = table.value(lo);
  if (!found.feasible || found.subset.empty()) found = decider.decide(Threshold::closed(report.ropt_sq), k);
  report.subset = found.subset;
  report.checked_invariants.push_back("closed feasible at ropt");
  if (decider.decide(Threshold::open(report.ropt_sq), k).feasible)
    throw InvariantViolation("open decision feasible at the baseline optimum");
  report.checked_invariants.push_back("open exceeds at ropt");
  certify_subset(P, k, report);
  return report;
}

}  // namespace hb
