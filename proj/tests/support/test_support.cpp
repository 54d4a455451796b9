#include "test_support.hpp"

#include <algorithm>
#include <limits>

#include "mcboltz/sphere.hpp"

namespace mcboltz::testing {

TuneResult tune(const std::function<double(double)>& objective, double lo, double hi, int sweep, int refine) {
    TuneResult r;
    std::vector<double> args(sweep), vals(sweep);
    const double ratio = sweep > 1 ? std::pow(hi / lo, 1.0 / (sweep - 1)) : 1.0;
    std::size_t best = 0;
    for (int i = 0; i < sweep; ++i) {
        args[i] = lo * std::pow(ratio, i);
        vals[i] = objective(args[i]);
        ++r.evaluations;
        if (!(vals[i] >= vals[best])) best = i;  // NaN never wins
    }
    r.arg = args[best];
    r.value = vals[best];
    if (refine <= 0 || sweep < 2) return r;

    // golden section on log(arg) inside the neighbouring samples
    double a = std::log(args[best > 0 ? best - 1 : 0]);
    double b = std::log(args[std::min<std::size_t>(best + 1, sweep - 1)]);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = objective(std::exp(x1)), f2 = objective(std::exp(x2));
    r.evaluations += 2;
    for (int it = 0; it < refine; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = objective(std::exp(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = objective(std::exp(x2));
        }
        ++r.evaluations;
    }
    for (auto [x, f] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
        if (f < r.value) {
            r.value = f;
            r.arg = std::exp(x);
        }
    }
    return r;
}

FieldError bkw_collision_error(const BkwCollisionRun& run) {
    const int M = run.order + 2;
    const int msig = run.sphere_points > 0 ? run.sphere_points : (run.dim == 2 ? run.order : 38);
    const BkwParams bp{run.dim, run.t > 0.0 ? run.t : (run.dim == 2 ? 2.0 : 6.5)};
    const Mapping map(run.kind, adaptive_scale(run.kind, run.half_width, M));
    const SpectralField f =
        project([&](std::span<const double> v) { return bkw_f(bp, v); }, run.dim, run.order, M, map);
    FastWorkspace ws(run.dim, run.order, M, map, Kernel::maxwell(run.dim), sphere_rule(run.dim, msig));
    const SpectralField q{map, ws.evaluate(f)};
    return expansion_error(q, [&](std::span<const double> v) { return bkw_q(bp, v); }, run.grid);
}

double max_abs_diff(const CubeArray& a, const CubeArray& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const CubeArray& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

} // namespace mcboltz::testing
