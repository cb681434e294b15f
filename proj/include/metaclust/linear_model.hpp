#pragma once

#include <span>
#include <vector>

namespace metaclust {

struct LinearModel {
    std::vector<double> weights;
    double intercept = 0.0;
    double ridge_lambda = 0.0;

    double predict(std::span<const double> features) const;
};

// Minimizes sum (w.x + b - y)^2 + lambda * ||w||^2 (intercept unpenalized)
// by an exact normal-equations solve. A singular system with lambda = 0
// raises an error advising lambda > 0.
LinearModel fit_linear(const std::vector<std::vector<double>>& features,
                       const std::vector<double>& targets, double ridge_lambda = 0.0);

}  // namespace metaclust
