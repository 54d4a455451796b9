#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace mcboltz {

/// Type-1 nonuniform DFT  F[K] = sum_j q_j exp(i K . z_j),  K in [-N, N]^d,
/// for points z_j in [0, pi]^d, to relative precision epsilon (measured
/// against sum_j |q_j|). Spreads with the exponential-of-semicircle kernel
/// onto a 2x oversampled periodic grid, applies a uniform FFT and divides by
/// the kernel's Fourier transform.
///
/// A plan owns scratch buffers: one execute at a time per plan.
class NufftPlan {
public:
    /// dim in {1, 2, 3}; modes = N >= 0; 1e-15 <= epsilon < 1.
    NufftPlan(int dim, int modes, double epsilon);
    ~NufftPlan();
    NufftPlan(NufftPlan&&) noexcept;
    NufftPlan& operator=(NufftPlan&&) noexcept;
    NufftPlan(const NufftPlan&) = delete;
    NufftPlan& operator=(const NufftPlan&) = delete;

    [[nodiscard]] int dim() const noexcept;
    [[nodiscard]] int modes() const noexcept;
    [[nodiscard]] int width() const noexcept;
    [[nodiscard]] int fine_size() const noexcept;
    [[nodiscard]] double beta() const noexcept;

    /// Number of outputs of execute: (2N+1)^d, row-major with index K_l + N.
    [[nodiscard]] std::size_t full_size() const noexcept;
    /// Number of outputs of execute_real: (2N+1)^{d-1} (N+1), last axis holds K_d = 0..N.
    [[nodiscard]] std::size_t half_size() const noexcept;

    /// points holds M rows of d coordinates. Throws std::invalid_argument on
    /// non-finite input, a point outside [0, pi], or a size mismatch.
    void execute(std::span<const double> points, std::span<const std::complex<double>> strengths,
                 std::span<std::complex<double>> out);

    /// Real strengths; returns the half spectrum (the rest follows from F[-K] = conj F[K]).
    void execute_real(std::span<const double> points, std::span<const double> strengths,
                      std::span<std::complex<double>> out);

    /// Spreading kernel exp(beta (sqrt(1 - t^2) - 1)) on [-1, 1], 0 outside.
    [[nodiscard]] double kernel(double t) const noexcept;
    /// Fast piecewise-polynomial kernel values at the `width` grid offsets for
    /// the fractional shift s in [0, 1]: out[i] ~ kernel((2/w)(i + s - w/2)).
    void kernel_row(double s, std::span<double> out) const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Literal O(M (2N+1)^d) evaluation of the same sum, full layout.
[[nodiscard]] std::vector<std::complex<double>> nufft_direct_sum(int dim, int modes, std::span<const double> points,
                                                                 std::span<const std::complex<double>> strengths);

} // namespace mcboltz
