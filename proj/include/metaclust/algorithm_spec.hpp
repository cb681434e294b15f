#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metaclust/types.hpp"

namespace metaclust {

enum class AlgorithmFamily { kmeans, spectral, single_linkage, complete_linkage, ward };

AlgorithmFamily family_from_string(const std::string& name);
std::string to_string(AlgorithmFamily family);

struct AlgorithmSpec {
    AlgorithmFamily family = AlgorithmFamily::kmeans;
    bool normalize_first = false;
    int k = 2;

    std::string label() const;
};

// Runs the named base algorithm, normalizing features first when requested.
Clustering run_algorithm(const AlgorithmSpec& spec, const Dataset& x, std::uint64_t seed);

// The ten-member family: each base algorithm plus a feature-normalized twin.
std::vector<AlgorithmSpec> default_algorithm_family(int k = 2);

}  // namespace metaclust
