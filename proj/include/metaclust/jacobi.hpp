#pragma once

#include <vector>

#include "metaclust/matrix.hpp"

namespace metaclust {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column i pairs with values[i]
};

// Cyclic Jacobi rotation method for dense symmetric matrices. Sweeps until
// the off-diagonal Frobenius norm falls below tol; throws "eigensolver
// failed" if max_sweeps is exhausted first.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tol = 1e-12,
                                int max_sweeps = 100);

}  // namespace metaclust
