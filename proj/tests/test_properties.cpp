#include "doctest.h"
#include "properties.hpp"

using namespace mcboltz::testing;

namespace {
void expect(const PropertyResult& r) {
    INFO(r.name << ": worst " << r.worst << " (limit " << r.limit << ") at " << r.where);
    CHECK(r.ok());
}
} // namespace

// the equilibrium sweep is reported by the acceptance binary

TEST_CASE("CGL quadrature exactness") { expect(cgl_quadrature_exactness()); }

TEST_CASE("discrete biorthonormality") {
    for (int order : {2, 5, 10}) expect(discrete_biorthonormality(order));
}

TEST_CASE("Lebedev exactness") { expect(lebedev_monomial_exactness()); }

TEST_CASE("evaluator bilinearity") { expect(evaluator_bilinearity()); }
