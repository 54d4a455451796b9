#pragma once

#include <mutex>
#include <span>

namespace mcboltz::detail {

/// In-place multidimensional DCT-I (FFTW REDFT00) over a cube with `n`
/// points per axis:
///   Y_k = sum over axes of [X_0 + (-1)^k X_{n-1} + 2 sum_{j=1}^{n-2} X_j cos(pi j k / (n-1))].
/// Plans are cached per (rank, n) and shared across threads; executing is thread-safe.
void dct1_inplace(std::span<double> data, int rank, int n);

/// FFTW's planner is not thread-safe; every plan creation and destruction takes this lock.
std::mutex& fftw_planner_mutex();

} // namespace mcboltz::detail
