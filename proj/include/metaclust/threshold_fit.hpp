#pragma once

#include <vector>

#include "metaclust/types.hpp"

namespace metaclust {

struct GraphProblem {
    WeightedGraph graph;
    Clustering truth;
};

struct ThresholdModel {
    double r = 1.0;
    double empirical_mean_loss = 0.0;
    int candidate_count = 0;
};

// Learns the single-linkage cutoff over {C_r | r > 0} by one Kruskal-style
// sweep of the union edge list. Per-graph pair-agreement counts live in a
// DisjointSet; each union adjusts agreement by the |A|*|B| pairs that just
// became intra-cluster, using per-root label histograms. The mean loss is
// snapshotted at every distinct weight boundary, plus a sentinel below the
// smallest positive weight standing for the all-singletons state. Total
// pair-update work is O(sum |V_i|^2); everything else is sort-dominated.
// Ties go to the smallest r. Zero-weight edges are merged unconditionally
// (every r > 0 keeps them), so candidates stay strictly positive.
ThresholdModel fit_single_linkage_threshold(const std::vector<GraphProblem>& problems);

// Mean clustering loss of C_r across the problems, via fresh component
// computations; the re-check path for ThresholdModel.empirical_mean_loss.
double threshold_mean_loss(const std::vector<GraphProblem>& problems, double r);

// Datasets become complete Euclidean-distance graphs; graph problems pass
// through unchanged.
std::vector<GraphProblem> to_graph_problems(const MetaRepository& repo);

}  // namespace metaclust
