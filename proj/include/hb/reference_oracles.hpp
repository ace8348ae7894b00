#pragma once

#include <string>
#include <vector>

#include "hb/canonical_values.hpp"
#include "hb/decider.hpp"

namespace hb {

enum class OracleMethod { BruteForce, CanonicalBinarySearch };

const char* to_string(OracleMethod method);

struct OracleReport {
  SquaredDistance ropt_sq;
  std::vector<std::size_t> subset;
  OracleMethod method = OracleMethod::BruteForce;
  std::vector<std::string> checked_invariants;
  std::size_t decide_calls = 0;
  // Number of distinct canonical values searched; zero for brute force and the hull shortcut.
  std::size_t canonical_size = 0;
};

/// Minimum Hausdorff value over every subset of at most k points. Limited to 14 points.
OracleReport brute_solve(const PointSet& P, std::size_t k);

inline constexpr std::size_t kBruteSolveMaxPoints = 14;

/// Smallest canonical value whose closed decision is feasible, by binary search over
/// the sorted canonical table. The prepared overload reuses a decider and index built on P.
OracleReport baseline_solve(const PointSet& P, std::size_t k);
OracleReport baseline_solve(const Decider& decider, const ExtremalIndex& idx, std::size_t k);

}  // namespace hb
