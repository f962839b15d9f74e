#include "fracinv/par/kernels.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracinv::par {

double dot_serial(const double* w, const double* v, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * v[i];
  return s;
}

namespace {

// kept out of line so every caller runs the exact same instruction sequence
// (inlining could vectorize one call site differently and break bitwise
// reproducibility between the serial-chunked and parallel paths)
__attribute__((noinline)) double chunk_sum(const double* w, const double* v, std::size_t lo,
                                           std::size_t hi) {
  double s = 0;
  for (std::size_t i = lo; i < hi; ++i) s += w[i] * v[i];
  return s;
}

} // namespace

double dot_chunked(const double* w, const double* v, std::size_t n) {
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  double total = 0;
  for (std::size_t c = 0; c < nchunks; ++c) {
    std::size_t lo = c * kChunk;
    std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    total += chunk_sum(w, v, lo, hi);
  }
  return total;
}

double dot_parallel(const double* w, const double* v, std::size_t n) {
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  if (nchunks <= 1) return dot_chunked(w, v, n);
  std::vector<double> partial(nchunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
    std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    partial[static_cast<std::size_t>(c)] = chunk_sum(w, v, lo, hi);
  }
  // partials combined in chunk order: the result matches dot_chunked bitwise
  double total = 0;
  for (double p : partial) total += p;
  return total;
}

void grid_eval(int nx, int ny, double x0, double x1, double y0, double y1,
               const std::function<std::array<double, 2>(double, double)>& f, double* u,
               double* v, bool parallel) {
  const double dx = nx > 1 ? (x1 - x0) / (nx - 1) : 0;
  const double dy = ny > 1 ? (y1 - y0) / (ny - 1) : 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      auto val = f(x0 + i * dx, y0 + j * dy);
      u[static_cast<std::size_t>(j) * nx + i] = val[0];
      v[static_cast<std::size_t>(j) * nx + i] = val[1];
    }
  }
#ifndef _OPENMP
  (void)parallel;
#endif
}

} // namespace fracinv::par
