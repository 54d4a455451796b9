#include "properties.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mcboltz/basis.hpp"
#include "mcboltz/chebyshev.hpp"
#include "mcboltz/collision_direct.hpp"
#include "mcboltz/collision_fast.hpp"
#include "mcboltz/oracles.hpp"
#include "mcboltz/sphere.hpp"
#include "test_support.hpp"

namespace mcboltz::testing {

namespace {

void note(PropertyResult& r, double dev, const std::string& where) {
    if (dev > r.worst || std::isnan(dev)) {
        r.worst = std::isnan(dev) ? INFINITY : dev;
        r.where = where;
    }
}

double norm_of(int k) { return k == 0 ? std::numbers::pi : std::numbers::pi / 2; }

// trial_k * test_l / mu^2 along one axis; the endpoint value is the analytic limit
double pair_factor(int k, int l, double xi, const Mapping& m) {
    if (std::abs(xi) == 1.0) {
        const double s = xi > 0 ? 1.0 : -1.0;
        return std::pow(s, k + l) / std::sqrt(norm_of(k) * norm_of(l));
    }
    const double v = m.forward(xi);
    const int ki[1] = {k}, li[1] = {l};
    const double vv[1] = {v};
    return trial_eval(ki, vv, m) * test_eval(li, vv, m) / m.mu_sq(xi);
}

double sphere_monomial(int a, int b, int c) {
    if (a % 2 || b % 2 || c % 2) return 0.0;
    const double x = (a + 1) / 2.0, y = (b + 1) / 2.0, z = (c + 1) / 2.0;
    return 2.0 * std::exp(std::lgamma(x) + std::lgamma(y) + std::lgamma(z) - std::lgamma(x + y + z));
}

} // namespace

PropertyResult cgl_quadrature_exactness() {
    PropertyResult r{"CGL quadrature exactness", 0.0, 1e-12, ""};
    for (int M = 2; M <= 48; ++M) {
        const CglRule rule = cgl_rule(M);
        for (int k = 0; k <= 2 * M - 3; ++k) {
            double s = 0.0;
            for (int j = 0; j < M; ++j) s += rule.weights[j] * std::cos(k * std::acos(rule.nodes[j]));
            const double exact = k == 0 ? std::numbers::pi : 0.0;
            note(r, std::abs(s - exact), "M=" + std::to_string(M) + " k=" + std::to_string(k));
        }
    }
    return r;
}

PropertyResult discrete_biorthonormality(int order) {
    PropertyResult r{"discrete biorthonormality", 0.0, 1e-10, ""};
    const int M = order + 2;
    const CglRule rule = cgl_rule(M);
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const Mapping m(kind, 1.7);
        // 1D
        for (int k = 0; k <= order; ++k) {
            for (int l = 0; l <= order; ++l) {
                double s = 0.0;
                for (int j = 0; j < M; ++j) s += rule.weights[j] * pair_factor(k, l, rule.nodes[j], m);
                note(r, std::abs(s - (k == l ? 1.0 : 0.0)),
                     to_string(kind) + " d=1 k=" + std::to_string(k) + " l=" + std::to_string(l));
            }
        }
        // 2D, full tensor evaluation at interior nodes
        for (int k1 = 0; k1 <= order; ++k1)
            for (int k2 = 0; k2 <= order; ++k2)
                for (int l1 = 0; l1 <= order; ++l1)
                    for (int l2 = 0; l2 <= order; ++l2) {
                        const int k[2] = {k1, k2}, l[2] = {l1, l2};
                        double s = 0.0;
                        for (int a = 0; a < M; ++a) {
                            for (int b = 0; b < M; ++b) {
                                const double xa = rule.nodes[a], xb = rule.nodes[b];
                                double val;
                                if (std::abs(xa) < 1.0 && std::abs(xb) < 1.0) {
                                    const double v[2] = {m.forward(xa), m.forward(xb)};
                                    val = trial_eval(k, v, m) * test_eval(l, v, m) / (m.mu_sq(xa) * m.mu_sq(xb));
                                } else {
                                    val = pair_factor(k1, l1, xa, m) * pair_factor(k2, l2, xb, m);
                                }
                                s += rule.weights[a] * rule.weights[b] * val;
                            }
                        }
                        const bool diag = k1 == l1 && k2 == l2;
                        std::ostringstream w;
                        w << to_string(kind) << " d=2 k=(" << k1 << "," << k2 << ") l=(" << l1 << "," << l2 << ")";
                        note(r, std::abs(s - (diag ? 1.0 : 0.0)), w.str());
                    }
    }
    return r;
}

PropertyResult lebedev_monomial_exactness() {
    PropertyResult r{"Lebedev monomial exactness", 0.0, 1e-9, ""};
    for (auto [count, degree] : lebedev_orders()) {
        const SphereRule rule = lebedev_rule(count);
        const int top = std::min(5, degree);
        for (int a = 0; a <= top; ++a)
            for (int b = 0; a + b <= top; ++b)
                for (int c = 0; a + b + c <= top; ++c) {
                    double s = 0.0;
                    for (int m = 0; m < rule.size(); ++m) {
                        const double* p = rule.point(m);
                        s += rule.weights[m] * std::pow(p[0], a) * std::pow(p[1], b) * std::pow(p[2], c);
                    }
                    std::ostringstream w;
                    w << count << " points, x^" << a << " y^" << b << " z^" << c;
                    note(r, std::abs(s - sphere_monomial(a, b, c)), w.str());
                }
    }
    return r;
}

PropertyResult evaluator_bilinearity() {
    PropertyResult r{"evaluator bilinearity", 0.0, 1e-10, ""};
    Gen gen(0xb111);
    auto check = [&](const std::string& who, const std::function<CubeArray(const SpectralField&)>& Q,
                     const SpectralField& f, const SpectralField& g) {
        SpectralField f2 = f, sum = f, diff = f;
        f2.coeffs *= 2.0;
        sum.coeffs += g.coeffs;
        diff.coeffs -= g.coeffs;
        const CubeArray qf = Q(f), qg = Q(g), q2 = Q(f2), qs = Q(sum), qd = Q(diff);
        const double scale = std::max({max_abs(qf), max_abs(qg), 1e-300});
        CubeArray four = qf;
        four *= 4.0;
        note(r, max_abs_diff(q2, four) / scale, who + " scaling");
        CubeArray lhs = qs + qd;
        CubeArray rhs = qf + qg;
        rhs *= 2.0;
        note(r, max_abs_diff(lhs, rhs) / scale, who + " parallelogram");
    };
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const Mapping m(kind, 1.3);
        for (const Kernel& ker : {Kernel::maxwell(2), Kernel(1.0, 1.0)}) {
            const int N = 4, M = N + 2;
            const DirectSetup setup{2, N, M, m, ker, circle_rule(N)};
            const CollisionTensors t = CollisionTensors::precompute(setup);
            FastWorkspace ws(2, N, M, m, ker, circle_rule(N));
            const SpectralField f = gen.field(2, N, m), g = gen.field(2, N, m);
            const std::string tag = to_string(kind) + " " + ker.describe();
            check("direct " + tag, [&](const SpectralField& x) { return t.apply(x); }, f, g);
            check("fast " + tag, [&](const SpectralField& x) { return ws.evaluate(x); }, f, g);
        }
    }
    return r;
}

PropertyResult equilibrium_annihilation() {
    PropertyResult r{"equilibrium annihilation", INFINITY, 1e-6, ""};
    const int N = 16, M = N + 2;
    const double U[2] = {0.0, 0.0};
    for (double S : {2.0, 2.5, 3.0, 3.5, 4.0}) {
        const Mapping m(MappingKind::Logarithmic, S);
        const SpectralField f =
            project([&](std::span<const double> v) { return maxwellian(v, 1.0, U, 1.0); }, 2, N, M, m);
        FastWorkspace ws(2, N, M, m, Kernel::maxwell(2), circle_rule(N));
        const double worst = max_abs(ws.evaluate(f));
        if (worst < r.worst) {
            r.worst = worst;
            std::ostringstream w;
            w << "S=" << S;
            r.where = w.str();
        }
    }
    return r;
}

} // namespace mcboltz::testing
