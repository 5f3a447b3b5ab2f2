#include "dix/kernels.hpp"

#include "dix/weyl_action.hpp"

namespace dix::kernels {

std::vector<MultiPoly> orbit_translates(const MultiPoly& p, const std::vector<WeylElement>& ws,
                                        Exec exec) {
  return map_indices<MultiPoly>(
      ws.size(), [&](std::size_t i) { return act(ws[i], p); }, exec);
}

namespace {
void accumulate_powers(std::vector<Rational>& acc, const Rational& v, int sign) {
  Rational pw = sign;
  for (std::size_t j = 0; j < acc.size(); ++j) {
    acc[j] += pw;
    pw *= v;
  }
}
}  // namespace

std::vector<Rational> signed_power_sums(const std::vector<Rational>& values,
                                        const std::vector<int>& signs, int order, Exec exec) {
  if (values.size() != signs.size()) throw Error(Errc::DimensionMismatch, "values vs signs");
  const std::size_t len = static_cast<std::size_t>(order + 1);
  std::vector<Rational> total(len);
  if (exec == Exec::Serial) {
    for (std::size_t k = 0; k < values.size(); ++k) accumulate_powers(total, values[k], signs[k]);
    return total;
  }
  // Exact sums are order independent, so per-thread partials reduce to the
  // same value as the serial loop.
#pragma omp parallel
  {
    std::vector<Rational> local(len);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(values.size()); ++k) {
      accumulate_powers(local, values[k], signs[k]);
    }
#pragma omp critical(dix_power_sums)
    for (std::size_t j = 0; j < len; ++j) total[j] += local[j];
  }
  return total;
}

}  // namespace dix::kernels
