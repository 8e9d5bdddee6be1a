#pragma once

#include <string>
#include <vector>

#include "divlab/common.hpp"

namespace divlab {

// Coarse order notation. Kinds:
//   kEq        f =~ g      (both directions, multiplicative + additive)
//   kLe        f <~ g      (f <= c1*g + c2)
//   kGe        f >~ g
//   kEqPlus    f =+ g      (additive only: |f-g| <= c2)
//   kLePlus    f <+ g      (f <= g + c2)
//   kGePlus    f >+ g
enum class OrderKind { kEq, kLe, kGe, kEqPlus, kLePlus, kGePlus };

const char* to_string(OrderKind k);

struct OrderConstants {
  double c1 = 1.0;  // multiplicative
  double c2 = 0.0;  // additive
};

struct OrderVerdict {
  bool holds = false;
  OrderConstants tightest;  // minimal constants certifying the relation
};

// cutoff [N]_K: N when N >= K (boundary inclusive), else 0.
inline Weight cutoff(Weight n, Weight k) {
  if (k < 0) throw UsageError("cutoff threshold must be nonnegative");
  if (n < 0) throw UsageError("cutoff argument must be nonnegative");
  return n >= k ? n : 0;
}

// Verifies the relation pointwise on the common domain and reports the
// tightest constants. For multiplicative kinds the pair (c1,c2) minimizes
// max(c1,c2) first, then c1: "balanced" constants, so f=t^2 vs g=3t^2+5
// reports (3,5) rather than c1=1 with a domain-sized additive term.
// When given.has constants, holds is evaluated against those instead.
OrderVerdict coarse_compare(const std::vector<double>& f, const std::vector<double>& g,
                            OrderKind kind);
bool coarse_holds(const std::vector<double>& f, const std::vector<double>& g, OrderKind kind,
                  OrderConstants given);

}  // namespace divlab
