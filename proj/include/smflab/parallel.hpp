#pragma once

#include <cstdint>
#include <functional>

#ifdef SMFLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace smflab {

/// Runs body(i) for i in [0, n). With OpenMP available and serial == false
/// iterations are distributed across threads; the body must therefore be
/// thread-safe. The serial path is kept as a reference implementation and is
/// exercised by the tests and the benchmark tool.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body,
                         bool serial = false) {
#ifdef SMFLAB_HAVE_OPENMP
  if (!serial) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)serial;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int parallel_thread_count() {
#ifdef SMFLAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace smflab
