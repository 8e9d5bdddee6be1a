#pragma once

#include <functional>
#include <string>
#include <vector>

#include "divlab/common.hpp"

namespace divlab {

// Counting-argument checker: a path split into pieces of length
// segment_len whose endpoint projections to an axis each move at most
// 2*b2 certifies |P| >= n*segment_len/2 where n is the number of pieces
// needed to span the axis, and hence div >= t^2/(4*b2) - O(t).
//
// Inputs are abstract: axis positions are real numbers (projection
// images on a line). The checker recomputes everything from the raw
// projected positions; it does not trust the caller's arithmetic.
struct ContractionCheck {
  bool ok = false;
  std::size_t pieces = 0;           // n
  Weight path_length = 0;           // |P| as given (edge count)
  double axis_span = 0.0;           // t = |proj(last) - proj(first)|
  double certified_lower = 0.0;     // n*segment_len/2
  double implied_div_bound = 0.0;   // t^2/(4 b2) - t/2
  std::size_t offending_piece = 0;  // valid when !ok
  double offending_jump = 0.0;
  std::string note;
};

// path_projections: projection of every path vertex to the axis line.
// segment_len: piece size in edges. b2: contraction constant (pieces of
// length <= segment_len project to diameter <= 2*b2; checked, not
// assumed). Throws UsageError on empty input.
ContractionCheck contraction_quadratic_lower_bound(const std::vector<double>& path_projections,
                                                   Weight segment_len, double b2);

}  // namespace divlab
