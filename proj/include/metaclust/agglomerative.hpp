#pragma once

#include <string>

#include "metaclust/types.hpp"

namespace metaclust {

enum class Linkage { single, complete, ward };

Linkage linkage_from_string(const std::string& name);
std::string to_string(Linkage linkage);

// Bottom-up merging until k clusters remain. Single/complete operate on
// Euclidean distances, ward on the variance-increase criterion via the
// Lance-Williams recurrence over squared distances. Merge ties go to the
// smallest (i, j) cluster-index pair.
Clustering agglomerative(const Dataset& x, Linkage linkage, int k);

}  // namespace metaclust
