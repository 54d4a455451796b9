#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mcboltz/chebyshev.hpp"
#include "mcboltz/cube_array.hpp"
#include "mcboltz/mapping.hpp"

namespace mcboltz {

/// Squared norm of T_k under the Chebyshev weight: pi for k = 0, pi/2 otherwise.
[[nodiscard]] double norm_const(int k) noexcept;

/// Trial function prod_l mu(xi_l)^4 T_{k_l}(xi_l) / sqrt(norm_const(k_l)) at velocity v.
[[nodiscard]] double trial_eval(std::span<const int> k, std::span<const double> v, const Mapping& m);

/// Test function prod_l mu(xi_l)^{-2} T_{k_l}(xi_l) / sqrt(norm_const(k_l)) at velocity v.
/// Grows like |v|^2 (algebraic) or exponentially (logarithmic); may overflow to inf.
[[nodiscard]] double test_eval(std::span<const int> k, std::span<const double> v, const Mapping& m);

/// Expansion coefficients of f_N = sum_k coeffs[k] * trial_k.
struct SpectralField {
    Mapping mapping;
    CubeArray coeffs;  // extent N + 1 per axis

    [[nodiscard]] int dim() const noexcept { return coeffs.dim(); }
    [[nodiscard]] int order() const noexcept { return coeffs.extent() - 1; }

    [[nodiscard]] static SpectralField zeros(int dim, int order, const Mapping& m) {
        return {m, CubeArray(dim, order + 1)};
    }
};

/// f_N sampled on the tensor CGL grid.
///   poly     = P, the pure Chebyshev part: f_N = mu^4 P
///   values   = f_N
///   weighted = f_N / mu^2 = mu^2 P, finite at every node
struct GridField {
    Mapping mapping;
    int points = 0;
    CubeArray poly;
    CubeArray values;
    CubeArray weighted;

    [[nodiscard]] int dim() const noexcept { return poly.dim(); }
};

/// Function of a d-dimensional point.
using PointFunction = std::function<double(std::span<const double>)>;

/// Projects f onto the trial space. Samples mu^{-4} f(v(xi)) on the CGL grid with
/// M_v points; samples at any endpoint node are taken as 0 (f must decay faster
/// than mu^4; use project_weighted otherwise). Throws std::domain_error naming the
/// node on a non-finite sample.
[[nodiscard]] SpectralField project(const PointFunction& f, int dim, int order, int grid_points, const Mapping& m);

/// Same as project, but the caller supplies xi -> mu(xi)^{-4} f(v(xi)) directly,
/// evaluated at every node including endpoints.
[[nodiscard]] SpectralField project_weighted(const PointFunction& weighted_f, int dim, int order, int grid_points,
                                             const Mapping& m);

/// f_N and its weighted variants on the CGL grid with `grid_points` per axis.
[[nodiscard]] GridField reconstruct(const SpectralField& field, int grid_points);

/// f_N(v) at a single point.
[[nodiscard]] double reconstruct_at(const SpectralField& field, std::span<const double> v);

/// f_N on the tensor product of the velocity axis `v_axis` with itself.
[[nodiscard]] CubeArray reconstruct_tensor(const SpectralField& field, std::span<const double> v_axis);

/// Velocity moments of f. U is the momentum integral of f v (not divided by rho);
/// P is d x d row-major with P_ij = int f v_i v_j; q_i = int f v_i |v|^2.
struct Moments {
    double rho = 0.0;
    std::vector<double> U;
    double E = 0.0;
    std::vector<double> P;
    std::vector<double> q;
};

/// Moments by CGL quadrature of f / mu^2 against polynomial weights.
/// Under the algebraic mapping, a cubic factor v_l^3 has no finite endpoint
/// limit; the endpoint nodes are omitted from that factor's sum.
[[nodiscard]] Moments moments(const GridField& grid, const CglRule& rule);

/// Coefficients m_k with sum_k m_k * test_k(v) = 1 (algebraic mapping only, N >= 2).
[[nodiscard]] CubeArray mass_weights(int dim, int order, const Mapping& m);
/// Coefficients e_k with sum_k e_k * test_k(v) = |v|^2 (algebraic mapping only, N >= 2).
[[nodiscard]] CubeArray energy_weights(int dim, int order, const Mapping& m);

} // namespace mcboltz
