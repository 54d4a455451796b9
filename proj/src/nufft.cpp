#include "mcboltz/nufft.hpp"

#include <fftw3.h>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "fftw_plans.hpp"

namespace mcboltz {

namespace {

constexpr double pi = std::numbers::pi;

bool is_smooth(int n) {
    for (int p : {2, 3, 5}) {
        while (n % p == 0) n /= p;
    }
    return n == 1;
}

int next_smooth_even(int n) {
    if (n % 2) ++n;
    while (!is_smooth(n)) n += 2;
    return n;
}

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

struct NufftPlan::Impl {
    int dim = 0;
    int modes = 0;
    int width = 0;
    double beta = 0.0;
    int n = 0;            // fine grid points per axis
    double h = 0.0;       // fine grid spacing
    int offset = 0;       // padded index = grid index + offset
    int padded = 0;       // padded extent per axis
    int degree = 0;       // piecewise polynomial degree
    std::vector<double> horner;  // horner[p * width + i], highest degree first
    std::vector<double> correction;  // 1 / kernel transform at K = 0..N

    std::vector<double> pad_re, pad_im;
    std::vector<double> grid_real;               // n^d
    std::vector<std::complex<double>> spectrum;  // r2c output
    std::vector<std::complex<double>> grid_cplx; // n^d
    fftw_plan plan_r2c = nullptr;
    fftw_plan plan_c2c = nullptr;

    ~Impl() {
        std::lock_guard lock(detail::fftw_planner_mutex());
        if (plan_r2c) fftw_destroy_plan(plan_r2c);
        if (plan_c2c) fftw_destroy_plan(plan_c2c);
    }

    double kernel(double t) const noexcept {
        if (std::abs(t) >= 1.0) return 0.0;
        return std::exp(beta * (std::sqrt((1.0 - t) * (1.0 + t)) - 1.0));
    }

    void build_horner() {
        // fit each of the `width` pieces in u = 2s - 1 on Chebyshev points, then convert to monomials
        degree = std::min(width + 4, 22);
        const int np = degree + 1;
        horner.assign(static_cast<std::size_t>(np) * width, 0.0);
        std::vector<double> nodes(np), cheb(np), mono(np), tk(np), tkm1(np), tkp1(np);
        for (int j = 0; j < np; ++j) nodes[j] = std::cos(pi * (j + 0.5) / np);
        for (int i = 0; i < width; ++i) {
            std::vector<double> vals(np);
            for (int j = 0; j < np; ++j) {
                const double s = 0.5 * (nodes[j] + 1.0);
                vals[j] = kernel(2.0 / width * (i + s - 0.5 * width));
            }
            for (int k = 0; k < np; ++k) {
                double sum = 0.0;
                for (int j = 0; j < np; ++j) sum += vals[j] * std::cos(pi * k * (j + 0.5) / np);
                cheb[k] = sum * (k == 0 ? 1.0 : 2.0) / np;
            }
            // monomial coefficients of sum cheb[k] T_k(u)
            std::fill(mono.begin(), mono.end(), 0.0);
            std::fill(tkm1.begin(), tkm1.end(), 0.0);
            std::fill(tk.begin(), tk.end(), 0.0);
            tkm1[0] = 1.0;  // T_0
            tk[1] = 1.0;    // T_1
            mono[0] += cheb[0];
            if (np > 1) mono[1] += cheb[1];
            for (int k = 2; k < np; ++k) {
                std::fill(tkp1.begin(), tkp1.end(), 0.0);
                for (int p = 0; p < np - 1; ++p) tkp1[p + 1] += 2.0 * tk[p];
                for (int p = 0; p < np; ++p) tkp1[p] -= tkm1[p];
                for (int p = 0; p < np; ++p) mono[p] += cheb[k] * tkp1[p];
                tkm1.swap(tk);
                tk.swap(tkp1);
            }
            for (int p = 0; p < np; ++p) horner[static_cast<std::size_t>(degree - p) * width + i] = mono[p];
        }
    }

    void kernel_row(double s, double* out) const noexcept {
        const double u = 2.0 * s - 1.0;
        const double* c = horner.data();
        for (int i = 0; i < width; ++i) out[i] = c[i];
        for (int p = 1; p <= degree; ++p) {
            const double* cp = c + static_cast<std::size_t>(p) * width;
            for (int i = 0; i < width; ++i) out[i] = out[i] * u + cp[i];
        }
    }

    void build_correction() {
        correction.resize(modes + 1);
        const int panels = 8;
        for (int k = 0; k <= modes; ++k) {
            const double freq = k * width * h / 2.0;
            double integral = 0.0;
            for (int p = 0; p < panels; ++p) {
                const double a = static_cast<double>(p) / panels;
                const double b = static_cast<double>(p + 1) / panels;
                integral += boost::math::quadrature::gauss<double, 30>::integrate(
                    [&](double t) { return kernel(t) * std::cos(freq * t); }, a, b);
            }
            // even integrand: int_{-1}^{1} = 2 int_0^1
            const double transform = 0.5 * width * 2.0 * integral;
            if (!(transform > 0.0)) {
                throw std::runtime_error("nufft: non-positive kernel transform at K=" + std::to_string(k));
            }
            correction[k] = 1.0 / transform;
        }
    }

    /// Spreads into pad_re (and pad_im when strengths_im is non-null).
    void spread(std::span<const double> points, const double* strengths_re, const double* strengths_im,
                std::size_t count) {
        const std::size_t pad_total = ipow(padded, dim);
        pad_re.assign(pad_total, 0.0);
        if (strengths_im) {
            pad_im.assign(pad_total, 0.0);
        } else {
            pad_im.clear();
        }
        switch (width) {
#define MCBOLTZ_SPREAD_CASE(W) \
    case W: spread_fixed<W>(points, strengths_re, strengths_im, count); break;
            MCBOLTZ_SPREAD_CASE(2) MCBOLTZ_SPREAD_CASE(3) MCBOLTZ_SPREAD_CASE(4) MCBOLTZ_SPREAD_CASE(5)
            MCBOLTZ_SPREAD_CASE(6) MCBOLTZ_SPREAD_CASE(7) MCBOLTZ_SPREAD_CASE(8) MCBOLTZ_SPREAD_CASE(9)
            MCBOLTZ_SPREAD_CASE(10) MCBOLTZ_SPREAD_CASE(11) MCBOLTZ_SPREAD_CASE(12) MCBOLTZ_SPREAD_CASE(13)
            MCBOLTZ_SPREAD_CASE(14) MCBOLTZ_SPREAD_CASE(15) MCBOLTZ_SPREAD_CASE(16)
#undef MCBOLTZ_SPREAD_CASE
            default: throw std::logic_error("nufft: unsupported width");
        }
    }

    double checked_coordinate(double z, std::size_t j) const {
        if (!std::isfinite(z)) throw std::invalid_argument("nufft: non-finite point at index " + std::to_string(j));
        if (z < 0.0 || z > pi) {
            if (z < -1e-12 || z > pi + 1e-12) {
                throw std::invalid_argument("nufft: point outside [0, pi] at index " + std::to_string(j));
            }
            z = std::clamp(z, 0.0, pi);
        }
        return z;
    }

    template <int W>
    void row_fixed(double s, double* out) const noexcept {
        const double u = 2.0 * s - 1.0;
        const double* c = horner.data();
        double acc[W];
        for (int i = 0; i < W; ++i) acc[i] = c[i];
        for (int p = 1; p <= degree; ++p) {
            const double* cp = c + static_cast<std::size_t>(p) * W;
            for (int i = 0; i < W; ++i) acc[i] = acc[i] * u + cp[i];
        }
        for (int i = 0; i < W; ++i) out[i] = acc[i];
    }

    template <int W>
    void spread_fixed(std::span<const double> points, const double* strengths_re, const double* strengths_im,
                      std::size_t count) {
        alignas(64) double rows_buf[3][W];
        int base[3] = {0, 0, 0};
        const double inv_h = 1.0 / h;
        const std::size_t P = static_cast<std::size_t>(padded);
        double* re = pad_re.data();
        double* im = strengths_im ? pad_im.data() : nullptr;
        for (std::size_t j = 0; j < count; ++j) {
            for (int l = 0; l < dim; ++l) {
                const double x = checked_coordinate(points[j * dim + l], j) * inv_h;
                const double i0 = std::ceil(x - 0.5 * W);
                row_fixed<W>(i0 - x + 0.5 * W, rows_buf[l]);
                base[l] = static_cast<int>(i0) + offset;
            }
            const double qr = strengths_re[j];
            const double qi = im ? strengths_im[j] : 0.0;
            if (!std::isfinite(qr) || !std::isfinite(qi)) {
                throw std::invalid_argument("nufft: non-finite strength at index " + std::to_string(j));
            }
            if (dim == 1) {
                add_fixed<W>(re, im, base[0], rows_buf[0], qr, qi);
            } else if (dim == 2) {
                for (int a = 0; a < W; ++a) {
                    add_fixed<W>(re, im, (base[0] + a) * P + base[1], rows_buf[1], qr * rows_buf[0][a],
                                 qi * rows_buf[0][a]);
                }
            } else {
                for (int a = 0; a < W; ++a) {
                    for (int b = 0; b < W; ++b) {
                        const double k = rows_buf[0][a] * rows_buf[1][b];
                        add_fixed<W>(re, im, ((base[0] + a) * P + base[1] + b) * P + base[2], rows_buf[2], qr * k,
                                     qi * k);
                    }
                }
            }
        }
    }

    template <int W>
    static void add_fixed(double* re, double* im, std::size_t start, const double* row, double sr,
                          double si) noexcept {
        double* dst = re + start;
        for (int c = 0; c < W; ++c) dst[c] += sr * row[c];
        if (im) {
            double* dsti = im + start;
            for (int c = 0; c < W; ++c) dsti[c] += si * row[c];
        }
    }

    /// Adds the padded grid, folded periodically, into `target` (n^d entries; T = double or complex).
    template <class T>
    void fold(T* target) const {
        std::vector<std::size_t> wrapped(padded);
        for (int p = 0; p < padded; ++p) {
            int i = (p - offset) % n;
            wrapped[p] = static_cast<std::size_t>(i < 0 ? i + n : i);
        }
        const std::size_t P = static_cast<std::size_t>(padded);
        const std::size_t nn = static_cast<std::size_t>(n);
        const bool cplx = !pad_im.empty();
        auto value = [&](std::size_t f) {
            if constexpr (std::is_same_v<T, double>) {
                return pad_re[f];
            } else {
                return T(pad_re[f], cplx ? pad_im[f] : 0.0);
            }
        };
        if (dim == 1) {
            for (std::size_t c = 0; c < P; ++c) target[wrapped[c]] += value(c);
        } else if (dim == 2) {
            for (std::size_t a = 0; a < P; ++a) {
                T* row = target + wrapped[a] * nn;
                const std::size_t src = a * P;
                for (std::size_t c = 0; c < P; ++c) row[wrapped[c]] += value(src + c);
            }
        } else {
            for (std::size_t a = 0; a < P; ++a) {
                for (std::size_t b = 0; b < P; ++b) {
                    T* row = target + (wrapped[a] * nn + wrapped[b]) * nn;
                    const std::size_t src = (a * P + b) * P;
                    for (std::size_t c = 0; c < P; ++c) row[wrapped[c]] += value(src + c);
                }
            }
        }
    }
};

NufftPlan::NufftPlan(int dim, int modes, double epsilon) : impl_(std::make_unique<Impl>()) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("nufft: dim must be 1, 2 or 3");
    if (modes < 0) throw std::invalid_argument("nufft: modes must be nonnegative");
    if (!(epsilon >= 1e-15 && epsilon < 1.0)) throw std::invalid_argument("nufft: epsilon must lie in [1e-15, 1)");
    auto& m = *impl_;
    m.dim = dim;
    m.modes = modes;
    m.width = std::clamp(static_cast<int>(std::ceil(std::log10(1.0 / epsilon))) + 1, 2, 16);
    m.beta = 2.30 * m.width;
    m.n = next_smooth_even(std::max(2 * (2 * modes + 1), 2 * m.width));
    m.h = 2.0 * pi / m.n;
    m.offset = m.width / 2 + 1;
    m.padded = m.n / 2 + m.width + 3;
    m.build_horner();
    m.build_correction();
}

NufftPlan::~NufftPlan() = default;
NufftPlan::NufftPlan(NufftPlan&&) noexcept = default;
NufftPlan& NufftPlan::operator=(NufftPlan&&) noexcept = default;

int NufftPlan::dim() const noexcept { return impl_->dim; }
int NufftPlan::modes() const noexcept { return impl_->modes; }
int NufftPlan::width() const noexcept { return impl_->width; }
int NufftPlan::fine_size() const noexcept { return impl_->n; }
double NufftPlan::beta() const noexcept { return impl_->beta; }
double NufftPlan::kernel(double t) const noexcept { return impl_->kernel(t); }

void NufftPlan::kernel_row(double s, std::span<double> out) const noexcept { impl_->kernel_row(s, out.data()); }

std::size_t NufftPlan::full_size() const noexcept { return ipow(2 * impl_->modes + 1, impl_->dim); }

std::size_t NufftPlan::half_size() const noexcept {
    return ipow(2 * impl_->modes + 1, impl_->dim - 1) * static_cast<std::size_t>(impl_->modes + 1);
}

void NufftPlan::execute(std::span<const double> points, std::span<const std::complex<double>> strengths,
                        std::span<std::complex<double>> out) {
    auto& m = *impl_;
    const std::size_t count = strengths.size();
    if (points.size() != count * m.dim) throw std::invalid_argument("nufft: points/strengths size mismatch");
    if (out.size() != full_size()) throw std::invalid_argument("nufft: output size mismatch");

    std::vector<double> re(count), im(count);
    for (std::size_t j = 0; j < count; ++j) {
        re[j] = strengths[j].real();
        im[j] = strengths[j].imag();
    }
    m.spread(points, re.data(), im.data(), count);

    const std::size_t total = ipow(m.n, m.dim);
    if (!m.plan_c2c) {
        m.grid_cplx.assign(total, {});
        std::vector<int> dims(m.dim, m.n);
        std::lock_guard lock(detail::fftw_planner_mutex());
        m.plan_c2c = fftw_plan_dft(m.dim, dims.data(), reinterpret_cast<fftw_complex*>(m.grid_cplx.data()),
                                   reinterpret_cast<fftw_complex*>(m.grid_cplx.data()), FFTW_BACKWARD,
                                   FFTW_ESTIMATE);
        if (!m.plan_c2c) throw std::runtime_error("nufft: FFTW planning failed");
    }
    std::fill(m.grid_cplx.begin(), m.grid_cplx.end(), std::complex<double>{});
    m.fold(m.grid_cplx.data());
    m.pad_im.clear();
    fftw_execute(m.plan_c2c);

    const int N = m.modes;
    const int e = 2 * N + 1;
    int idx[3] = {0, 0, 0};
    for (std::size_t o = 0; o < out.size(); ++o) {
        std::size_t src = 0;
        double corr = 1.0;
        for (int l = 0; l < m.dim; ++l) {
            const int K = idx[l] - N;
            src = src * m.n + static_cast<std::size_t>(K < 0 ? K + m.n : K);
            corr *= m.correction[std::abs(K)];
        }
        out[o] = m.grid_cplx[src] * corr;
        for (int l = m.dim - 1; l >= 0; --l) {
            if (++idx[l] < e) break;
            idx[l] = 0;
        }
    }
}

void NufftPlan::execute_real(std::span<const double> points, std::span<const double> strengths,
                             std::span<std::complex<double>> out) {
    auto& m = *impl_;
    const std::size_t count = strengths.size();
    if (points.size() != count * m.dim) throw std::invalid_argument("nufft: points/strengths size mismatch");
    if (out.size() != half_size()) throw std::invalid_argument("nufft: output size mismatch");

    m.pad_im.clear();
    m.spread(points, strengths.data(), nullptr, count);

    const std::size_t total = ipow(m.n, m.dim);
    const int half = m.n / 2 + 1;
    if (!m.plan_r2c) {
        m.grid_real.assign(total, 0.0);
        m.spectrum.assign(total / m.n * half, {});
        std::vector<int> dims(m.dim, m.n);
        std::lock_guard lock(detail::fftw_planner_mutex());
        m.plan_r2c = fftw_plan_dft_r2c(m.dim, dims.data(), m.grid_real.data(),
                                       reinterpret_cast<fftw_complex*>(m.spectrum.data()), FFTW_ESTIMATE);
        if (!m.plan_r2c) throw std::runtime_error("nufft: FFTW planning failed");
    }
    std::fill(m.grid_real.begin(), m.grid_real.end(), 0.0);
    m.fold(m.grid_real.data());
    fftw_execute(m.plan_r2c);

    // forward transform of real data: sum x exp(-i...) = conj of the wanted sum
    const int N = m.modes;
    const int e = 2 * N + 1;
    int idx[3] = {0, 0, 0};
    for (std::size_t o = 0; o < out.size(); ++o) {
        std::size_t src = 0;
        double corr = 1.0;
        for (int l = 0; l < m.dim - 1; ++l) {
            const int K = idx[l] - N;
            src = src * m.n + static_cast<std::size_t>(K < 0 ? K + m.n : K);
            corr *= m.correction[std::abs(K)];
        }
        const int K_last = idx[m.dim - 1];
        src = src * half + static_cast<std::size_t>(K_last);
        corr *= m.correction[K_last];
        out[o] = std::conj(m.spectrum[src]) * corr;
        for (int l = m.dim - 1; l >= 0; --l) {
            if (++idx[l] < (l == m.dim - 1 ? N + 1 : e)) break;
            idx[l] = 0;
        }
    }
}

std::vector<std::complex<double>> nufft_direct_sum(int dim, int modes, std::span<const double> points,
                                                   std::span<const std::complex<double>> strengths) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("nufft_direct_sum: dim must be 1, 2 or 3");
    const std::size_t count = strengths.size();
    if (points.size() != count * dim) throw std::invalid_argument("nufft_direct_sum: size mismatch");
    const int e = 2 * modes + 1;
    std::vector<std::complex<double>> out(ipow(e, dim));
    // per-axis phase tables exp(i K z)
    std::vector<std::complex<double>> phase(static_cast<std::size_t>(dim) * e);
    for (std::size_t j = 0; j < count; ++j) {
        for (int l = 0; l < dim; ++l) {
            const double z = points[j * dim + l];
            for (int K = -modes; K <= modes; ++K) {
                phase[static_cast<std::size_t>(l) * e + K + modes] = std::polar(1.0, K * z);
            }
        }
        int idx[3] = {0, 0, 0};
        for (std::size_t o = 0; o < out.size(); ++o) {
            std::complex<double> p = strengths[j];
            for (int l = 0; l < dim; ++l) p *= phase[static_cast<std::size_t>(l) * e + idx[l]];
            out[o] += p;
            for (int l = dim - 1; l >= 0; --l) {
                if (++idx[l] < e) break;
                idx[l] = 0;
            }
        }
    }
    return out;
}

} // namespace mcboltz
