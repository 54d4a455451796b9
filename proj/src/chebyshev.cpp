#include "mcboltz/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fftw_plans.hpp"

namespace mcboltz {

namespace {

/// Copies the leading sub-cube of extent `from.extent()` into a cube of extent `to_extent`
/// (zero-padding) or the leading sub-cube of extent `to_extent` out of `from` (truncating).
CubeArray resize_cube(const CubeArray& from, int to_extent) {
    const int d = from.dim();
    CubeArray to(d, to_extent);
    const int common = std::min(from.extent(), to_extent);
    std::vector<int> idx(d, 0);
    std::size_t count = 1;
    for (int l = 0; l < d; ++l) count *= static_cast<std::size_t>(common);
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t rem = c;
        for (int l = d - 1; l >= 0; --l) {
            idx[l] = static_cast<int>(rem % common);
            rem /= common;
        }
        to[to.flat(idx)] = from[from.flat(idx)];
    }
    return to;
}

/// Multiplies every entry by prod_l factor[idx_l].
void scale_separable(CubeArray& a, std::span<const double> factor) {
    const int d = a.dim();
    const int e = a.extent();
    std::vector<int> idx(d, 0);
    for (std::size_t f = 0; f < a.size(); ++f) {
        double s = 1.0;
        for (int l = 0; l < d; ++l) s *= factor[idx[l]];
        a[f] *= s;
        for (int l = d - 1; l >= 0; --l) {
            if (++idx[l] < e) break;
            idx[l] = 0;
        }
    }
}

void check_grid(std::span<const double> values, int dim, int points) {
    if (dim < 1) throw std::invalid_argument("chebyshev: dim must be positive");
    if (points < 2) throw std::invalid_argument("chebyshev: need at least 2 grid points");
    std::size_t n = 1;
    for (int l = 0; l < dim; ++l) n *= static_cast<std::size_t>(points);
    if (values.size() != n) throw std::invalid_argument("chebyshev: value array does not match grid");
}

} // namespace

double cheb_eval(int k, double xi) {
    if (!(std::abs(xi) <= 1.0)) throw std::domain_error("cheb_eval: xi outside [-1, 1]");
    if (k < 0) throw std::invalid_argument("cheb_eval: negative degree");
    if (k == 0) return 1.0;
    double prev = 1.0, cur = xi;
    for (int j = 1; j < k; ++j) {
        const double next = 2.0 * xi * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void cheb_values(double xi, std::span<double> out) noexcept {
    if (out.empty()) return;
    out[0] = 1.0;
    if (out.size() == 1) return;
    out[1] = xi;
    for (std::size_t k = 2; k < out.size(); ++k) out[k] = 2.0 * xi * out[k - 1] - out[k - 2];
}

CglRule cgl_rule(int points) {
    if (points < 2) throw std::invalid_argument("cgl_rule: need at least 2 points, got " + std::to_string(points));
    CglRule rule;
    rule.points = points;
    rule.nodes.resize(points);
    rule.weights.assign(points, std::numbers::pi / (points - 1));
    const int n = points - 1;
    for (int j = 0; j <= n; ++j) {
        // symmetric evaluation so that nodes[j] == -nodes[n-j] exactly
        if (2 * j == n) {
            rule.nodes[j] = 0.0;
        } else if (2 * j < n) {
            rule.nodes[j] = -std::cos(std::numbers::pi * j / n);
        } else {
            rule.nodes[j] = std::cos(std::numbers::pi * (n - j) / n);
        }
    }
    rule.weights.front() *= 0.5;
    rule.weights.back() *= 0.5;
    return rule;
}

CubeArray cheb_weighted_sums(std::span<const double> values, int dim, int points, int order) {
    check_grid(values, dim, points);
    if (order < 0) throw std::invalid_argument("chebyshev: negative order");
    CubeArray work(dim, points);
    std::copy(values.begin(), values.end(), work.storage().begin());
    detail::dct1_inplace(work.values(), dim, points);

    const int n = points - 1;
    std::vector<double> factor(points);
    for (int k = 0; k < points; ++k) factor[k] = (k % 2 == 0 ? 1.0 : -1.0) * std::numbers::pi / (2.0 * n);
    scale_separable(work, factor);
    return resize_cube(work, order + 1);
}

CubeArray cheb_forward(std::span<const double> values, int dim, int points, int order) {
    check_grid(values, dim, points);
    if (points < order + 1) {
        throw std::invalid_argument("cheb_forward: grid has " + std::to_string(points) +
                                    " points per axis, need at least order+1 = " + std::to_string(order + 1));
    }
    CubeArray work(dim, points);
    std::copy(values.begin(), values.end(), work.storage().begin());
    detail::dct1_inplace(work.values(), dim, points);

    const int n = points - 1;
    std::vector<double> factor(points);
    for (int k = 0; k < points; ++k) {
        factor[k] = (k % 2 == 0 ? 1.0 : -1.0) / n;
        if (k == 0 || k == n) factor[k] *= 0.5;
    }
    scale_separable(work, factor);
    return resize_cube(work, order + 1);
}

CubeArray cheb_inverse(const CubeArray& coeffs, int points) {
    if (points < 2) throw std::invalid_argument("cheb_inverse: need at least 2 grid points");
    if (coeffs.extent() > points) {
        // more modes than grid points: evaluate directly
        const CglRule rule = cgl_rule(points);
        return cheb_inverse_tensor(coeffs, rule.nodes);
    }
    CubeArray work = resize_cube(coeffs, points);
    const int n = points - 1;
    std::vector<double> factor(points);
    for (int k = 0; k < points; ++k) {
        factor[k] = (k % 2 == 0 ? 0.5 : -0.5);
        if (k == 0 || k == n) factor[k] *= 2.0;
    }
    scale_separable(work, factor);
    detail::dct1_inplace(work.values(), coeffs.dim(), points);
    return work;
}

double cheb_inverse_at(const CubeArray& coeffs, std::span<const double> xi) {
    const int d = coeffs.dim();
    const int e = coeffs.extent();
    if (static_cast<int>(xi.size()) != d) throw std::invalid_argument("cheb_inverse_at: dimension mismatch");
    std::vector<double> t(static_cast<std::size_t>(d) * e);
    for (int l = 0; l < d; ++l) cheb_values(xi[l], std::span(t).subspan(static_cast<std::size_t>(l) * e, e));
    std::vector<int> idx(d, 0);
    double sum = 0.0;
    for (std::size_t f = 0; f < coeffs.size(); ++f) {
        double p = coeffs[f];
        for (int l = 0; l < d; ++l) p *= t[static_cast<std::size_t>(l) * e + idx[l]];
        sum += p;
        for (int l = d - 1; l >= 0; --l) {
            if (++idx[l] < e) break;
            idx[l] = 0;
        }
    }
    return sum;
}

CubeArray cheb_inverse_tensor(const CubeArray& coeffs, std::span<const double> xi_axis) {
    const int e = coeffs.extent();
    const int rows = static_cast<int>(xi_axis.size());
    std::vector<double> matrix(static_cast<std::size_t>(rows) * e);
    for (int r = 0; r < rows; ++r) {
        cheb_values(xi_axis[r], std::span(matrix).subspan(static_cast<std::size_t>(r) * e, e));
    }
    return apply_along_axes(coeffs, matrix, rows);
}

CubeArray apply_along_axes(const CubeArray& in, std::span<const double> matrix, int rows) {
    const int d = in.dim();
    const int e = in.extent();
    if (matrix.size() != static_cast<std::size_t>(rows) * e) {
        throw std::invalid_argument("apply_along_axes: matrix shape mismatch");
    }
    // shape evolves axis by axis from (e,...,e) to (rows,...,rows)
    std::vector<double> cur(in.storage());
    std::vector<std::size_t> shape(d, static_cast<std::size_t>(e));
    for (int axis = 0; axis < d; ++axis) {
        std::size_t outer = 1, inner = 1;
        for (int l = 0; l < axis; ++l) outer *= shape[l];
        for (int l = axis + 1; l < d; ++l) inner *= shape[l];
        std::vector<double> next(outer * rows * inner, 0.0);
        for (std::size_t o = 0; o < outer; ++o) {
            const double* src = cur.data() + o * e * inner;
            double* dst = next.data() + o * rows * inner;
            for (int r = 0; r < rows; ++r) {
                const double* mrow = matrix.data() + static_cast<std::size_t>(r) * e;
                double* drow = dst + r * inner;
                for (int k = 0; k < e; ++k) {
                    const double m = mrow[k];
                    if (m == 0.0) continue;
                    const double* srow = src + k * inner;
                    for (std::size_t i = 0; i < inner; ++i) drow[i] += m * srow[i];
                }
            }
        }
        cur.swap(next);
        shape[axis] = static_cast<std::size_t>(rows);
    }
    CubeArray out(d, rows);
    out.storage() = std::move(cur);
    return out;
}

} // namespace mcboltz
