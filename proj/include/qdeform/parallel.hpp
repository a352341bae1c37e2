// Batch kernels: a set of independent exact computations (overlap
// reductions, per-word axiom checks, cocycle-table entries) evaluated either
// serially or with OpenMP.  Results are collected by index, so output is
// identical across policies and thread counts.  The serial path is the
// reference implementation; the benchmark target compares the two.

#pragma once

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdeform {

enum class ExecPolicy { serial, openmp };

// Evaluates fn(i) for i in [0, n) and returns the results in index order.
template <typename Result, typename Fn>
std::vector<Result> par_map(std::size_t n, ExecPolicy policy, Fn&& fn) {
  std::vector<Result> out(n);
#ifdef _OPENMP
  if (policy == ExecPolicy::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

}  // namespace qdeform
