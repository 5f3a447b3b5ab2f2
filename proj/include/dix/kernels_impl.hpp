#pragma once

#include <exception>
#include <optional>

namespace dix::kernels {

template <class T>
std::vector<T> map_indices(std::size_t n, const std::function<T(std::size_t)>& f, Exec exec) {
  std::vector<std::optional<T>> slots(n);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(f(i));
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      try {
        slots[i].emplace(f(static_cast<std::size_t>(i)));
      } catch (...) {
#pragma omp critical(dix_map_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace dix::kernels
