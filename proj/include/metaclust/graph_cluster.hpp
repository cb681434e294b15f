#pragma once

#include "metaclust/types.hpp"

namespace metaclust {

// Connected components of the subgraph keeping edges with w <= r
// (strict=false) or w < r (strict=true).
Clustering single_linkage_threshold_cluster(const WeightedGraph& g, double r,
                                            bool strict = false);

// Complete graph on the dataset's points with Euclidean edge weights.
WeightedGraph euclidean_to_graph(const Dataset& x);

// Each column shifted to mean 0 and scaled to population variance 1;
// zero-variance columns become all zeros.
Dataset normalize_features(const Dataset& x);

}  // namespace metaclust
