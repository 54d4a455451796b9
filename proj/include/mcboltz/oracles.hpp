#pragma once

#include <span>
#include <vector>

#include "mcboltz/basis.hpp"
#include "mcboltz/cube_array.hpp"

namespace mcboltz {

/// Self-similar exact solution for Maxwell molecules (B = 1/(2 pi) in 2D, 1/(4 pi) in 3D).
struct BkwParams {
    int dim = 2;
    double t = 2.0;

    /// 2D: 1 - exp(-t/8)/2; 3D: 1 - exp(-t/6).
    [[nodiscard]] double K() const;
    /// dK/dt.
    [[nodiscard]] double K_rate() const;
};

[[nodiscard]] double bkw_f(const BkwParams& p, std::span<const double> v);
/// Exact collision operator, equal to the time derivative of bkw_f.
[[nodiscard]] double bkw_q(const BkwParams& p, std::span<const double> v);

/// rho / (2 pi T)^{d/2} exp(-|v - U|^2 / (2T)).
[[nodiscard]] double maxwellian(std::span<const double> v, double rho, std::span<const double> U, double T);

/// 2D initial datum: two unit-temperature Maxwellians of mass 1/2 centred at (-1, 2) and (3, -3).
[[nodiscard]] double two_gaussian_f0(std::span<const double> v);

/// Closed-form moments of the two-Gaussian solution under the 2D Maxwell kernel.
struct TwoGaussianMoments {
    double P11, P12, P22, q1, q2;
};
[[nodiscard]] TwoGaussianMoments two_gaussian_moments(double t);
inline constexpr double two_gaussian_rho = 1.0;
inline constexpr double two_gaussian_energy = 13.5;

/// Uniform tensor grid of `count` nodes per axis on [-half_width, half_width], endpoints included.
struct ErrorGrid {
    int count = 200;
    double half_width = 6.3;

    [[nodiscard]] std::vector<double> axis() const;
};

struct FieldError {
    double l2 = 0.0;        // sqrt(mean squared difference * box volume)
    double linf = 0.0;      // max absolute difference
    double l2_plain = 0.0;  // sqrt(sum of squared differences)
};

/// Compares values on the error grid (row-major, count^d) against `exact`.
[[nodiscard]] FieldError field_error(const CubeArray& numeric, const PointFunction& exact, const ErrorGrid& grid);

/// Error of f_N = sum_k coeffs[k] trial_k on the error grid. For collision
/// coefficients Q_k this reconstructs the operator itself (the trial and test
/// bases are biorthonormal).
[[nodiscard]] FieldError expansion_error(const SpectralField& field, const PointFunction& exact,
                                         const ErrorGrid& grid);

} // namespace mcboltz
