#include "metaclust/erm.hpp"

#include <cmath>
#include <stdexcept>

#include "metaclust/metrics.hpp"

namespace metaclust {

ErmSelection erm_select(const std::vector<UnsupervisedAlgorithm>& family,
                        const MetaRepository& repo) {
    if (family.empty()) throw std::invalid_argument("erm_select: empty family");
    repo.require_nonempty("erm_select");

    ErmSelection selection;
    selection.per_member_loss.reserve(family.size());
    for (std::size_t m = 0; m < family.size(); ++m) {
        double total = 0.0;
        for (const auto& problem : repo.problems) {
            double loss = 1.0;
            try {
                loss = clustering_loss(problem.truth, family[m](problem));
            } catch (const std::exception&) {
                // Unusable output carries the maximal Eq.-style loss.
            }
            total += loss;
        }
        const double mean = total / static_cast<double>(repo.size());
        selection.per_member_loss.push_back(mean);
        if (m == 0 || mean < selection.mean_loss) {
            selection.mean_loss = mean;
            selection.index = m;
        }
    }
    return selection;
}

double generalization_bound(int n, int family_size, double delta) {
    if (n < 1) throw std::invalid_argument("generalization_bound: n must be >= 1");
    if (family_size < 1)
        throw std::invalid_argument("generalization_bound: family_size must be >= 1");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("generalization_bound: delta must be in (0,1)");
    return std::sqrt((2.0 / static_cast<double>(n)) *
                     std::log(static_cast<double>(family_size) / delta));
}

}  // namespace metaclust
