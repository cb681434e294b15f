#pragma once

#include <vector>

#include "metaclust/types.hpp"

namespace metaclust {

// Cross-tabulation of two clusterings over the same point set.
struct ContingencyTable {
    Matrix counts;             // k_y x k_z cell counts n_ij
    std::vector<long long> row_sums;
    std::vector<long long> col_sums;
    long long total = 0;
};

ContingencyTable contingency_table(const Clustering& y, const Clustering& z);

// Fraction of ordered point pairs on which the two partitions agree.
// Requires matching point sets and at least two points.
double rand_index(const Clustering& y, const Clustering& z);

// 1 - rand_index when the point sets match, 1 otherwise. Matching sets with a
// single point have no pairs to disagree on and score 0.
double clustering_loss(const Clustering& y, const Clustering& z);

// Hubert-Arabie permutation-model correction. When MaxIndex == ExpectedIndex
// (both partitions all-singletons or both one-cluster) returns 1 for
// identical partitions and 0 otherwise.
double adjusted_rand_index(const Clustering& y, const Clustering& z);

// Mean over points of (b - a) / max(a, b) with Euclidean distances; points in
// singleton clusters contribute 0. Requires k >= 2.
double silhouette(const Dataset& x, const Clustering& c);

// Root-mean-square difference between predicted and reference cluster counts.
double rmse_k(const std::vector<int>& k_hat, const std::vector<int>& k_star);

}  // namespace metaclust
