#pragma once

#include <cstdint>

#include "metaclust/types.hpp"

namespace metaclust {

// RBF affinity exp(-gamma * ||xi - xj||^2), symmetric normalized Laplacian,
// bottom-k eigenvectors via cyclic Jacobi, row-normalized embedding, then
// k-means (10 restarts) on the embedding rows. gamma <= 0 selects the 1/d
// default.
Clustering spectral(const Dataset& x, int k, double gamma, std::uint64_t seed);

}  // namespace metaclust
