#pragma once

#include <string>

namespace mcboltz::testing {

/// Outcome of one property sweep: the worst measured deviation against its limit.
struct PropertyResult {
    std::string name;
    double worst = 0.0;
    double limit = 0.0;
    std::string where;

    [[nodiscard]] bool ok() const { return worst <= limit; }
};

/// sum_j w_j T_k(xi_j) against int T_k omega for M = 2..48, k <= 2M - 3.
PropertyResult cgl_quadrature_exactness();

/// Gram matrix of trial against test functions under the CGL rule, d = 1 and 2,
/// M_v = N + 2, against the identity.
PropertyResult discrete_biorthonormality(int order);

/// Every tabulated Lebedev rule against the analytic sphere integrals of
/// x^a y^b z^c with a + b + c <= min(5, degree).
PropertyResult lebedev_monomial_exactness();

/// Q(2f) = 4 Q(f) and Q(f + g) + Q(f - g) = 2 Q(f) + 2 Q(g) for the direct and
/// fast evaluators, relative to max |Q|.
PropertyResult evaluator_bilinearity();

/// Unit Maxwellian (rho = 1, U = 0, T = 1), 2D Maxwell kernel, N = 16, M_v = 18,
/// M_sigma = 16: max |Q_k| over a scale sweep on the logarithmic mapping.
PropertyResult equilibrium_annihilation();

} // namespace mcboltz::testing
