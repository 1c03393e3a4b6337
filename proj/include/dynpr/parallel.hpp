#pragma once
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dynpr {

// Work chunk for dynamically scheduled vertex loops.
inline constexpr int kScheduleChunk = 2048;

inline int maxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int threadId() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

inline void setThreadCount(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

/// Sums term(i) over [0, n) using fixed-size blocks whose partial sums are
/// combined in block order. The result is independent of thread count,
/// which keeps floating-point reductions reproducible.
template <class Term>
double blockSum(std::uint64_t n, Term&& term) {
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partials(blocks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = begin + kBlock < n ? begin + kBlock : n;
    double s = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) s += term(i);
    partials[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

/// Max of term(i) over [0, n). Max is exact, so a plain parallel reduction
/// is already reproducible; kept alongside blockSum for symmetry.
template <class Term>
double blockMax(std::uint64_t n, Term&& term) {
  double result = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : result)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const double t = term(static_cast<std::uint64_t>(i));
    if (t > result) result = t;
  }
  return result;
}

}  // namespace dynpr
