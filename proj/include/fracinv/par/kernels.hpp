#pragma once
#include <array>
#include <cstddef>
#include <functional>

namespace fracinv::par {

// fixed chunk size so the reduction order never depends on the thread count
inline constexpr std::size_t kChunk = 2048;

// plain left-to-right dot product (reference implementation for tests)
double dot_serial(const double* w, const double* v, std::size_t n);

// chunked reduction: per-chunk partial sums combined in chunk order
double dot_chunked(const double* w, const double* v, std::size_t n);

// OpenMP version of dot_chunked; bitwise identical to it for any thread count
double dot_parallel(const double* w, const double* v, std::size_t n);

// evaluate a planar field over a uniform grid (row-major u/v output arrays);
// element-wise map, so the parallel version is trivially deterministic
void grid_eval(int nx, int ny, double x0, double x1, double y0, double y1,
               const std::function<std::array<double, 2>(double, double)>& f, double* u,
               double* v, bool parallel);

} // namespace fracinv::par
