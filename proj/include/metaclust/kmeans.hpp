#pragma once

#include <cstdint>

#include "metaclust/types.hpp"

namespace metaclust {

struct KMeansConfig {
    int k = 2;
    int restarts = 10;
    int max_iterations = 300;
    double tolerance = 1e-8;  // on center movement
    std::uint64_t seed = 0;
};

struct KMeansResult {
    Clustering clustering;
    Matrix centers;       // k x d
    double inertia = 0.0;  // sum of squared distances to assigned centers
};

// Lloyd iterations from k-means++ starts; the restart with lowest inertia
// wins (ties to the earlier restart). Empty clusters are refilled with the
// point farthest from its current center, so exactly k clusters come back.
KMeansResult kmeans(const Dataset& x, const KMeansConfig& cfg);

}  // namespace metaclust
