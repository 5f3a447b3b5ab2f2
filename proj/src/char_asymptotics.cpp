#include "dix/char_asymptotics.hpp"

namespace dix {

Rational root_product(const std::vector<Weight>& roots, const Weight& y) {
  Rational p = 1;
  for (const auto& a : roots) p *= inner(a, y);
  return p;
}

LaurentSeries character_series(const IndexFamily& fam, const Weight& lambda, const Weight& y,
                               int order, const RootDatum& datum) {
  require_regular_direction(y, datum);
  const int pole = static_cast<int>(datum.num_noncompact_positive());
  const auto spin = spin_weights(datum);
  const TruncatedSeries denom = spin_character_series(spin, y, order + pole).shift_down(pole);
  const TruncatedSeries num = ch_series(evaluate_index(fam, lambda, datum), y, order, datum);
  return {pole, num / denom};
}

LimitReport leading_limit(const IndexFamily& fam, const Weight& lambda, const Weight& y, int d,
                          const RootDatum& datum) {
  const int pole = static_cast<int>(datum.num_noncompact_positive());
  LimitReport r;
  r.d = d;
  if (d < pole) {
    // t^{d - pole} body diverges unless body vanishes to order pole - d.
    r.status = LimitStatus::DUnderflow;
    return r;
  }
  const auto series = character_series(fam, lambda, y, d - pole, datum);
  // t^d t^{-pole} body -> 0 when d > pole.
  r.value = d == pole ? series.body[0] : Rational(0);
  if (d > pole) {
    r.expected = 0;
  } else {
    std::vector<Weight> all;
    for (const auto& root : datum.positive_roots()) all.push_back(root.vec);
    const Rational q = index_polynomial(fam, datum).eval(lambda);
    r.expected = root_product(datum.compact_positive_roots(), y) / root_product(all, y) * q;
  }
  r.match = r.value == r.expected;
  return r;
}

}  // namespace dix
