#include "metaclust/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "metaclust/matrix.hpp"

namespace metaclust {

double LinearModel::predict(std::span<const double> features) const {
    if (features.size() != weights.size())
        throw std::invalid_argument("feature dimension does not match model");
    double y = intercept;
    for (std::size_t i = 0; i < weights.size(); ++i) y += weights[i] * features[i];
    return y;
}

LinearModel fit_linear(const std::vector<std::vector<double>>& features,
                       const std::vector<double>& targets, double ridge_lambda) {
    if (features.empty()) throw std::invalid_argument("fit_linear: no samples");
    if (features.size() != targets.size())
        throw std::invalid_argument("fit_linear: feature/target count mismatch");
    if (ridge_lambda < 0.0) throw std::invalid_argument("fit_linear: lambda must be >= 0");
    const std::size_t p = features.front().size();
    for (const auto& f : features)
        if (f.size() != p) throw std::invalid_argument("fit_linear: inconsistent dimensions");

    // Augmented system over [w; b]; the intercept column is not penalized.
    const std::size_t m = p + 1;
    Matrix gram(m, m);
    std::vector<double> rhs(m, 0.0);
    for (std::size_t s = 0; s < features.size(); ++s) {
        const auto& f = features[s];
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) gram(i, j) += f[i] * f[j];
            gram(i, p) += f[i];
            gram(p, i) += f[i];
            rhs[i] += f[i] * targets[s];
        }
        gram(p, p) += 1.0;
        rhs[p] += targets[s];
    }
    for (std::size_t i = 0; i < p; ++i) gram(i, i) += ridge_lambda;

    double scale = 1.0;
    for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::abs(gram(i, i)));

    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(gram(r, col)) > std::abs(gram(pivot, col))) pivot = r;
        if (std::abs(gram(pivot, col)) < 1e-12 * scale) {
            throw std::runtime_error(
                "fit_linear: singular normal equations; use ridge_lambda > 0");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < m; ++c) std::swap(gram(col, c), gram(pivot, c));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t r = col + 1; r < m; ++r) {
            const double factor = gram(r, col) / gram(col, col);
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < m; ++c) gram(r, c) -= factor * gram(col, c);
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<double> beta(m, 0.0);
    for (std::size_t i = m; i-- > 0;) {
        double v = rhs[i];
        for (std::size_t j = i + 1; j < m; ++j) v -= gram(i, j) * beta[j];
        beta[i] = v / gram(i, i);
    }

    LinearModel model;
    model.weights.assign(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(p));
    model.intercept = beta[p];
    model.ridge_lambda = ridge_lambda;
    return model;
}

}  // namespace metaclust
