#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

namespace mcboltz {

/// Isotropic variable-hard-sphere kernel B = C |v - v*|^lambda, 0 <= lambda <= 1.
/// lambda = 0 is the Maxwell (constant) kernel.
class Kernel {
public:
    Kernel(double constant, double exponent);

    /// B = 1/(2 pi) in 2D, 1/(4 pi) in 3D, so that B times the sphere measure is 1.
    [[nodiscard]] static Kernel maxwell(int dim);
    /// Parses "maxwell2d", "maxwell3d" or "vhs:<C>:<lambda>".
    [[nodiscard]] static Kernel parse(std::string_view text);

    [[nodiscard]] double constant() const noexcept { return constant_; }
    [[nodiscard]] double exponent() const noexcept { return exponent_; }
    [[nodiscard]] bool is_constant() const noexcept { return exponent_ == 0.0; }

    /// B as a function of the relative speed; 0 at zero speed when lambda > 0.
    [[nodiscard]] double of_speed(double speed) const noexcept {
        if (exponent_ == 0.0) return constant_;
        if (exponent_ == 1.0) return constant_ * speed;
        return constant_ * std::pow(speed, exponent_);
    }

    /// B(|v - v*|, cos theta). The angular argument is accepted but unused.
    [[nodiscard]] double eval(std::span<const double> v, std::span<const double> v_star,
                              std::span<const double> sigma) const noexcept;

    /// Canonical descriptor, "vhs:<C>:<lambda>" with round-trip digits.
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const Kernel&, const Kernel&) = default;

private:
    double constant_;
    double exponent_;
};

} // namespace mcboltz
