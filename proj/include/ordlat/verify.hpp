#ifndef ORDLAT_VERIFY_HPP
#define ORDLAT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordlat/core.hpp"

namespace ordlat {

/// Sizes and knobs for the built-in verification suite. Defaults match the
/// documented desk-scale experiment: linear order of 6 points, exhaustive
/// grid 3x2, backtracking grid 4x3, boundary window of height 8.
struct VerifyOptions {
  int linear_n = 6;
  GridShape small_grid{3, 2};   // exhaustively filtered (needs m*h <= 8)
  GridShape large_grid{4, 3};   // searched by backtracking
  int window_height = 8;        // single-vertical window for boundary checks
  int jobs = 1;
  std::optional<int> boundary_cap;  // default: window_height - 1
};

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  std::string fig1_dot;        // 5-node lattice on the linear order
  std::string fig2_dot;        // 7-node grid diagram (includes neighbor)
  std::string fig2_range_dot;  // 6-node diagram between codir_1 and order

  bool all_pass() const;
  /// One "Ax PASS/FAIL <detail>" line per criterion.
  std::string text() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace ordlat

#endif  // ORDLAT_VERIFY_HPP
