#pragma once

// Global characters on the compact Cartan near the identity, as exact
// Laurent series in t along exp(ty).

#include "dix/dirac.hpp"
#include "dix/kvirt.hpp"

namespace dix {

// t^{-pole_order} * body
struct LaurentSeries {
  int pole_order = 0;
  TruncatedSeries body;
};

// ch_k(I(X_lambda)) / ch_k(S+ - S-) along exp(ty); body through t^order.
LaurentSeries character_series(const IndexFamily& fam, const Weight& lambda, const Weight& y,
                               int order, const RootDatum& datum);

enum class LimitStatus { Ok, DUnderflow };

struct LimitReport {
  int d = 0;
  LimitStatus status = LimitStatus::Ok;
  Rational value;
  Rational expected;
  bool match = false;
};

// lim_{t->0+} t^d ch_g(X_lambda)(exp ty), against 0 for d above the pole
// order and (prod_k alpha(y) / prod_g alpha(y)) Q(lambda) at it.
LimitReport leading_limit(const IndexFamily& fam, const Weight& lambda, const Weight& y, int d,
                          const RootDatum& datum);

// prod over the given roots of alpha(y)
Rational root_product(const std::vector<Weight>& roots, const Weight& y);

}  // namespace dix
