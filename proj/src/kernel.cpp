#include "mcboltz/kernel.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcboltz {

namespace {

double parse_number(std::string_view text, std::string_view what) {
    double out = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("kernel: cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
    return out;
}

std::string shortest(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

} // namespace

Kernel::Kernel(double constant, double exponent) : constant_(constant), exponent_(exponent) {
    if (!(constant > 0.0) || !std::isfinite(constant)) throw std::invalid_argument("kernel: C must be positive");
    if (!(exponent >= 0.0 && exponent <= 1.0)) throw std::invalid_argument("kernel: lambda must lie in [0, 1]");
}

Kernel Kernel::maxwell(int dim) {
    if (dim == 2) return {1.0 / (2.0 * std::numbers::pi), 0.0};
    if (dim == 3) return {1.0 / (4.0 * std::numbers::pi), 0.0};
    throw std::invalid_argument("kernel: maxwell needs dim 2 or 3");
}

Kernel Kernel::parse(std::string_view text) {
    if (text == "maxwell2d") return maxwell(2);
    if (text == "maxwell3d") return maxwell(3);
    if (text.starts_with("vhs:")) {
        const auto rest = text.substr(4);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("kernel: expected vhs:<C>:<lambda>, got '" + std::string(text) + "'");
        }
        return {parse_number(rest.substr(0, colon), "C"), parse_number(rest.substr(colon + 1), "lambda")};
    }
    throw std::invalid_argument("kernel: unknown descriptor '" + std::string(text) +
                                "' (expected maxwell2d, maxwell3d or vhs:<C>:<lambda>)");
}

double Kernel::eval(std::span<const double> v, std::span<const double> v_star,
                    std::span<const double> /*sigma*/) const noexcept {
    double s2 = 0.0;
    for (std::size_t l = 0; l < v.size(); ++l) {
        const double g = v[l] - v_star[l];
        s2 += g * g;
    }
    return of_speed(std::sqrt(s2));
}

std::string Kernel::describe() const { return "vhs:" + shortest(constant_) + ":" + shortest(exponent_); }

} // namespace mcboltz
