#pragma once

#include <functional>
#include <vector>

#include "metaclust/types.hpp"

namespace metaclust {

using UnsupervisedAlgorithm = std::function<Clustering(const LabeledProblem&)>;

struct ErmSelection {
    std::size_t index = 0;
    double mean_loss = 1.0;
    std::vector<double> per_member_loss;
};

// Picks the family member with smallest mean clustering loss over the
// repository; ties go to the smallest index. A member that throws on a
// problem scores loss 1 on it and the sweep continues.
ErmSelection erm_select(const std::vector<UnsupervisedAlgorithm>& family,
                        const MetaRepository& repo);

// sqrt((2/n) * ln(family_size / delta)).
double generalization_bound(int n, int family_size, double delta);

}  // namespace metaclust
