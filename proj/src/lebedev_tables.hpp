#pragma once

#include <array>

namespace mcboltz::detail {

struct LebedevTable {
    int points;
    int degree;
    const double* data;  // points rows of (x, y, z, weight), weights sum to 4 pi
};

const std::array<LebedevTable, 12>& lebedev_tables();

} // namespace mcboltz::detail
