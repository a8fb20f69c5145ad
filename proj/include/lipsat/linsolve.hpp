#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lipsat/rational.hpp"

namespace lipsat {

/// One equation: sum over (column -> coefficient) of coeff * u_col = rhs.
struct LinearRow {
    std::map<int, Rat> coeffs;
    Rat rhs = 0;
};

/// Exact sparse Gaussian elimination. Rows are processed in order, pivots
/// are the smallest column of each reduced row, and free columns are set to
/// zero, so identical systems always give identical solutions.
std::optional<std::vector<Rat>> solve_sparse(std::vector<LinearRow> rows,
                                             std::size_t ncols);

}  // namespace lipsat
