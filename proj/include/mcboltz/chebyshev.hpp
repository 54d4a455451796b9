#pragma once

#include <span>
#include <vector>

#include "mcboltz/cube_array.hpp"

namespace mcboltz {

/// T_k(xi) by the three-term recurrence. Throws std::domain_error for |xi| > 1.
[[nodiscard]] double cheb_eval(int k, double xi);

/// Fills out[k] = T_k(xi) for k = 0..out.size()-1. No domain check.
void cheb_values(double xi, std::span<double> out) noexcept;

/// Chebyshev-Gauss-Lobatto rule on [-1, 1] for the weight (1 - xi^2)^{-1/2}.
/// Nodes ascend: nodes[j] = -cos(j pi / (M - 1)).
struct CglRule {
    int points = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Throws std::invalid_argument when M < 2.
[[nodiscard]] CglRule cgl_rule(int points);

/// Coefficients c_k, 0 <= k <= order per axis, of the interpolant
/// sum c_k prod T_{k_l}(xi_l) through `values` sampled on the tensor CGL grid
/// with `points` nodes per axis. Coefficients above `order` are dropped.
/// Requires points >= order + 1.
[[nodiscard]] CubeArray cheb_forward(std::span<const double> values, int dim, int points, int order);

/// Quadrature sums sum_j W_j F(xi_j) prod T_{k_l}(xi_{j,l}) over the tensor
/// CGL grid (W the product weights), for 0 <= k <= order per axis.
[[nodiscard]] CubeArray cheb_weighted_sums(std::span<const double> values, int dim, int points, int order);

/// Values of sum c_k T_k on the tensor CGL grid with `points` nodes per axis.
[[nodiscard]] CubeArray cheb_inverse(const CubeArray& coeffs, int points);

/// Value of sum c_k T_k at a single reference point.
[[nodiscard]] double cheb_inverse_at(const CubeArray& coeffs, std::span<const double> xi);

/// Values of sum c_k T_k on the tensor product of `xi_axis` with itself.
[[nodiscard]] CubeArray cheb_inverse_tensor(const CubeArray& coeffs, std::span<const double> xi_axis);

/// Applies the same (rows x in.extent()) row-major matrix along every axis.
[[nodiscard]] CubeArray apply_along_axes(const CubeArray& in, std::span<const double> matrix, int rows);

} // namespace mcboltz
