// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace compsel {

enum class Execution { Serial, Parallel };

struct ExecPolicy {
  Execution mode = Execution::Parallel;
  int threads = 0;  // 0: OpenMP default
};

inline constexpr ExecPolicy kSerial{Execution::Serial, 1};

/// Thread count OpenMP would use for a parallel region (1 without OpenMP).
int omp_default_threads();

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
/// The serial path is the reference; the OpenMP path must match it exactly as
/// long as fn(i) depends only on i.
template <class T, class Fn>
std::vector<T> map_trials(std::size_t n, const ExecPolicy& policy, Fn&& fn) {
  std::vector<T> out(n);
  if (policy.mode == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  const long count = static_cast<long>(n);
  const int threads = policy.threads;
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_default_threads())
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(compsel_map_trials)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace compsel
