#pragma once

// Hot loops with a serial reference and an OpenMP variant. Both variants
// return identical results; the serial one is kept for testing.

#include <functional>
#include <vector>

#include "dix/lie_core.hpp"
#include "dix/polyalg.hpp"

namespace dix::kernels {

enum class Exec { Serial, Parallel };

// w . P for every w, in the order given.
std::vector<MultiPoly> orbit_translates(const MultiPoly& p, const std::vector<WeylElement>& ws,
                                        Exec exec = Exec::Parallel);

// out[j] = sum_k signs[k] * values[k]^j for j = 0..order.
std::vector<Rational> signed_power_sums(const std::vector<Rational>& values,
                                        const std::vector<int>& signs, int order,
                                        Exec exec = Exec::Parallel);

// out[i] = f(i) for i in [0, n). f must be safe to call concurrently.
template <class T>
std::vector<T> map_indices(std::size_t n, const std::function<T(std::size_t)>& f,
                           Exec exec = Exec::Parallel);

}  // namespace dix::kernels

#include "dix/kernels_impl.hpp"
