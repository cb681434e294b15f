#include "metaclust/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "metaclust/jacobi.hpp"
#include "metaclust/kmeans.hpp"

namespace metaclust {

Clustering spectral(const Dataset& x, int k, double gamma, std::uint64_t seed) {
    const std::size_t n = x.size();
    if (k < 2 || static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("spectral: k must be in [2, n]");
    if (gamma <= 0.0) gamma = 1.0 / static_cast<double>(x.dim());

    Matrix affinity(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        affinity(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = std::exp(-gamma * squared_distance(x.points.row(i), x.points.row(j), x.dim()));
            affinity(i, j) = a;
            affinity(j, i) = a;
        }
    }

    std::vector<double> inv_sqrt_degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) deg += affinity(i, j);
        inv_sqrt_degree[i] = deg > 0.0 ? 1.0 / std::sqrt(deg) : 0.0;
    }
    Matrix laplacian(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            laplacian(i, j) = (i == j ? 1.0 : 0.0) -
                              inv_sqrt_degree[i] * affinity(i, j) * inv_sqrt_degree[j];

    const EigenDecomposition eig = jacobi_eigen(laplacian);

    Dataset embedding;
    embedding.points = Matrix(n, static_cast<std::size_t>(k));
    embedding.point_ids = x.point_ids.empty() ? default_point_ids(n) : x.point_ids;
    for (std::size_t i = 0; i < n; ++i) {
        double norm_sq = 0.0;
        for (int j = 0; j < k; ++j) {
            const double v = eig.vectors(i, static_cast<std::size_t>(j));
            embedding.points(i, static_cast<std::size_t>(j)) = v;
            norm_sq += v * v;
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (int j = 0; j < k; ++j) embedding.points(i, static_cast<std::size_t>(j)) *= inv;
        }
    }

    KMeansConfig cfg;
    cfg.k = k;
    cfg.restarts = 10;
    cfg.seed = seed;
    return kmeans(embedding, cfg).clustering;
}

}  // namespace metaclust
