#pragma once

#include <string>
#include <string_view>

namespace mcboltz {

enum class MappingKind {
    Logarithmic,  // tail parameter r = 0, v = S artanh(xi)
    Algebraic     // tail parameter r = 1, v = S xi / sqrt(1 - xi^2)
};

[[nodiscard]] std::string to_string(MappingKind kind);
/// Accepts "log"/"logarithmic" and "alg"/"algebraic".
[[nodiscard]] MappingKind parse_mapping_kind(std::string_view text);

/// Bijection between the reference interval (-1, 1) and the real line,
/// with the weight mu(xi) = (1 - xi^2)^{(1+r)/4} / sqrt(S) such that
/// dv/dxi = omega(xi) / mu(xi)^2 where omega is the Chebyshev weight.
///
/// Immutable after construction. Reference points within 1e-14 of +-1 are
/// treated as the endpoints.
class Mapping {
public:
    Mapping(MappingKind kind, double scale);

    [[nodiscard]] MappingKind kind() const noexcept { return kind_; }
    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] int tail() const noexcept { return kind_ == MappingKind::Logarithmic ? 0 : 1; }

    /// v(xi); returns +-infinity at xi = +-1. Throws std::domain_error for |xi| > 1.
    [[nodiscard]] double forward(double xi) const;
    /// xi(v) in closed form.
    [[nodiscard]] double inverse(double v) const noexcept;
    /// mu(xi); zero at the endpoints. Throws std::domain_error for |xi| > 1.
    [[nodiscard]] double mu(double xi) const;
    [[nodiscard]] double mu_sq(double xi) const;
    /// dv/dxi; infinite at the endpoints.
    [[nodiscard]] double jacobian(double xi) const;

    /// mu(xi(v))^{-2} evaluated directly from v, without forming xi.
    [[nodiscard]] double inv_mu_sq_at(double v) const noexcept;
    /// arccos(xi(v)) evaluated directly from v; accurate when xi(v) is near +-1.
    [[nodiscard]] double angle_at(double v) const noexcept;

    friend bool operator==(const Mapping&, const Mapping&) = default;

private:
    MappingKind kind_;
    double scale_;
};

/// Scale S such that the second-largest Chebyshev-Gauss-Lobatto node of a
/// grid with `grid_points` nodes, cos(pi / (grid_points - 1)), maps to L.
/// Requires L > 0 and grid_points >= 4.
[[nodiscard]] double adaptive_scale(MappingKind kind, double half_width, int grid_points);

} // namespace mcboltz
