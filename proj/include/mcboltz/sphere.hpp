#pragma once

#include <array>
#include <vector>

namespace mcboltz {

/// Quadrature on the unit sphere S^{d-1}. Points are stored row-major
/// (points[m * dim + l]); weights sum to the surface measure.
struct SphereRule {
    int dim = 0;
    std::vector<double> points;
    std::vector<double> weights;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(weights.size()); }
    [[nodiscard]] const double* point(int m) const noexcept { return points.data() + static_cast<std::size_t>(m) * dim; }
};

/// Equispaced angles 2 pi m / M starting at 0, equal weights 2 pi / M.
[[nodiscard]] SphereRule circle_rule(int count);

/// Lebedev rule with `count` points. Throws std::invalid_argument listing the
/// supported counts when `count` is not tabulated.
[[nodiscard]] SphereRule lebedev_rule(int count);

/// Supported Lebedev point counts and their polynomial degrees of exactness.
[[nodiscard]] std::vector<std::array<int, 2>> lebedev_orders();

/// circle_rule for dim 2, lebedev_rule for dim 3.
[[nodiscard]] SphereRule sphere_rule(int dim, int count);

} // namespace mcboltz
