#include "metaclust/algorithm_spec.hpp"

#include <stdexcept>

#include "metaclust/agglomerative.hpp"
#include "metaclust/graph_cluster.hpp"
#include "metaclust/kmeans.hpp"
#include "metaclust/spectral.hpp"

namespace metaclust {

AlgorithmFamily family_from_string(const std::string& name) {
    if (name == "kmeans") return AlgorithmFamily::kmeans;
    if (name == "spectral") return AlgorithmFamily::spectral;
    if (name == "single") return AlgorithmFamily::single_linkage;
    if (name == "complete") return AlgorithmFamily::complete_linkage;
    if (name == "ward") return AlgorithmFamily::ward;
    throw std::invalid_argument("unknown algorithm family: " + name);
}

std::string to_string(AlgorithmFamily family) {
    switch (family) {
        case AlgorithmFamily::kmeans: return "kmeans";
        case AlgorithmFamily::spectral: return "spectral";
        case AlgorithmFamily::single_linkage: return "single";
        case AlgorithmFamily::complete_linkage: return "complete";
        case AlgorithmFamily::ward: return "ward";
    }
    return "?";
}

std::string AlgorithmSpec::label() const {
    std::string s = to_string(family);
    if (normalize_first) s += "-N";
    return s;
}

Clustering run_algorithm(const AlgorithmSpec& spec, const Dataset& x, std::uint64_t seed) {
    const Dataset* data = &x;
    Dataset normalized;
    if (spec.normalize_first) {
        normalized = normalize_features(x);
        data = &normalized;
    }
    switch (spec.family) {
        case AlgorithmFamily::kmeans: {
            KMeansConfig cfg;
            cfg.k = spec.k;
            cfg.seed = seed;
            return kmeans(*data, cfg).clustering;
        }
        case AlgorithmFamily::spectral:
            return spectral(*data, spec.k, 0.0, seed);
        case AlgorithmFamily::single_linkage:
            return agglomerative(*data, Linkage::single, spec.k);
        case AlgorithmFamily::complete_linkage:
            return agglomerative(*data, Linkage::complete, spec.k);
        case AlgorithmFamily::ward:
            return agglomerative(*data, Linkage::ward, spec.k);
    }
    throw std::logic_error("unreachable");
}

std::vector<AlgorithmSpec> default_algorithm_family(int k) {
    std::vector<AlgorithmSpec> family;
    for (bool normalize : {false, true}) {
        family.push_back({AlgorithmFamily::kmeans, normalize, k});
        family.push_back({AlgorithmFamily::spectral, normalize, k});
        family.push_back({AlgorithmFamily::single_linkage, normalize, k});
        family.push_back({AlgorithmFamily::complete_linkage, normalize, k});
        family.push_back({AlgorithmFamily::ward, normalize, k});
    }
    return family;
}

}  // namespace metaclust
