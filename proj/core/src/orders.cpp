#include "divlab/metric/orders.hpp"

#include <algorithm>
#include <cmath>

namespace divlab {

const char* to_string(OrderKind k) {
  switch (k) {
    case OrderKind::kEq: return "=~";
    case OrderKind::kLe: return "<~";
    case OrderKind::kGe: return ">~";
    case OrderKind::kEqPlus: return "=+";
    case OrderKind::kLePlus: return "<+";
    case OrderKind::kGePlus: return ">+";
  }
  return "?";
}

namespace {

void require_domain(const std::vector<double>& f, const std::vector<double>& g) {
  if (f.empty() || f.size() != g.size())
    throw UsageError("coarse_compare needs a nonempty common domain");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] < 0 || g[i] < 0) throw UsageError("coarse_compare values must be nonnegative");
}

// Minimal additive c2 for f <= c1*g + c2 at fixed c1.
double additive_for(const std::vector<double>& f, const std::vector<double>& g, double c1) {
  double c2 = 0;
  for (std::size_t i = 0; i < f.size(); ++i) c2 = std::max(c2, f[i] - c1 * g[i]);
  return c2;
}

// Balanced constants for f <= c1*g + c2: minimize max(c1,c2), then c1.
// c2(c1) is nonincreasing in c1, so the optimal max M is either
// max(1, c2(1)) or the crossing point of c2(c1) = c1; given M, the
// smallest admissible c1 is found by a second bisection.
OrderConstants balanced_le(const std::vector<double>& f, const std::vector<double>& g) {
  double m;
  if (additive_for(f, g, 1.0) <= 1.0) {
    m = std::max(1.0, additive_for(f, g, 1.0));
  } else {
    double lo = 1.0, hi = 1.0;
    while (additive_for(f, g, hi) > hi && hi < 1e12) hi *= 2;
    for (int it = 0; it < 200; ++it) {
      double mid = (lo + hi) / 2;
      if (additive_for(f, g, mid) > mid)
        lo = mid;
      else
        hi = mid;
    }
    m = hi;
  }
  // smallest c1 in [1, m] with c2(c1) <= m
  double lo = 1.0, hi = std::max(1.0, m);
  if (additive_for(f, g, lo) <= m + 1e-12) {
    hi = lo;
  } else {
    for (int it = 0; it < 200; ++it) {
      double mid = (lo + hi) / 2;
      if (additive_for(f, g, mid) > m + 1e-12)
        lo = mid;
      else
        hi = mid;
    }
  }
  double c1 = hi;
  double snapped = std::round(c1);
  if (snapped >= 1.0 && std::abs(c1 - snapped) < 1e-6 &&
      additive_for(f, g, snapped) <= m + 1e-9)
    c1 = snapped;
  OrderConstants k;
  k.c1 = c1;
  k.c2 = std::max(0.0, additive_for(f, g, c1));
  return k;
}

bool le_holds(const std::vector<double>& f, const std::vector<double>& g, OrderConstants k) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > k.c1 * g[i] + k.c2 + 1e-9) return false;
  return true;
}

bool le_plus_holds(const std::vector<double>& f, const std::vector<double>& g, double c2) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i] + c2 + 1e-9) return false;
  return true;
}

}  // namespace

OrderVerdict coarse_compare(const std::vector<double>& f, const std::vector<double>& g,
                            OrderKind kind) {
  require_domain(f, g);
  OrderVerdict v;
  switch (kind) {
    case OrderKind::kLe: {
      v.tightest = balanced_le(f, g);
      v.holds = true;  // always certifiable on a finite domain
      break;
    }
    case OrderKind::kGe: {
      v.tightest = balanced_le(g, f);
      v.holds = true;
      break;
    }
    case OrderKind::kEq: {
      OrderConstants a = balanced_le(f, g);
      OrderConstants b = balanced_le(g, f);
      v.tightest.c1 = std::max(a.c1, b.c1);
      v.tightest.c2 = std::max({a.c2, b.c2, additive_for(f, g, v.tightest.c1),
                                additive_for(g, f, v.tightest.c1)});
      v.holds = true;
      break;
    }
    case OrderKind::kLePlus: {
      v.tightest.c1 = 1.0;
      v.tightest.c2 = additive_for(f, g, 1.0);
      v.holds = true;
      break;
    }
    case OrderKind::kGePlus: {
      v.tightest.c1 = 1.0;
      v.tightest.c2 = additive_for(g, f, 1.0);
      v.holds = true;
      break;
    }
    case OrderKind::kEqPlus: {
      v.tightest.c1 = 1.0;
      v.tightest.c2 = std::max(additive_for(f, g, 1.0), additive_for(g, f, 1.0));
      v.holds = true;
      break;
    }
  }
  if (v.tightest.c2 < 1e-12) v.tightest.c2 = 0;
  return v;
}

bool coarse_holds(const std::vector<double>& f, const std::vector<double>& g, OrderKind kind,
                  OrderConstants given) {
  require_domain(f, g);
  switch (kind) {
    case OrderKind::kLe: return le_holds(f, g, given);
    case OrderKind::kGe: return le_holds(g, f, given);
    case OrderKind::kEq:
      return le_holds(f, g, given) && le_holds(g, f, given);
    case OrderKind::kLePlus: return le_plus_holds(f, g, given.c2);
    case OrderKind::kGePlus: return le_plus_holds(g, f, given.c2);
    case OrderKind::kEqPlus:
      return le_plus_holds(f, g, given.c2) && le_plus_holds(g, f, given.c2);
  }
  return false;
}

}  // namespace divlab
