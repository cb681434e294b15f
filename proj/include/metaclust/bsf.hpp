#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "metaclust/rng.hpp"
#include "metaclust/types.hpp"

namespace metaclust {

inline constexpr std::size_t kPairFeatureDim = 75;
inline constexpr std::size_t kPairCoordDim = 10;

using PairFeatures = std::array<double, kPairFeatureDim>;

// [x_i padded to 10 | x_j padded to 10 | upper triangle (incl. diagonal) of
// the 10x10 zero-padded population covariance, row-major: 55 entries].
struct PairExample {
    PairFeatures features{};
    int label = 0;  // 1 iff the two source points share a class label
    int problem_id = 0;
    int i = 0;
    int j = 0;
};

// Caches the padded coordinates and the shared covariance block of one
// normalized dataset, so featurizing many pairs stays cheap.
class PairFeaturizer {
public:
    explicit PairFeaturizer(const Dataset& normalized_x);
    PairFeatures features(std::size_t i, std::size_t j) const;

private:
    Matrix padded_;                  // n x 10
    std::array<double, 55> cov_{};
};

// One-off featurization; x must already be normalized per coordinate.
PairFeatures pair_features(const Dataset& normalized_x, std::size_t i, std::size_t j);

// Swaps the two coordinate blocks, keeping the covariance block and label.
PairExample swap_pair_order(const PairExample& pair);

// Uniform unordered pairs without replacement, up to cap, labeled by the
// problem's truth. The dataset is normalized before featurization.
std::vector<PairExample> sample_pairs(const LabeledProblem& problem, int problem_id,
                                      std::size_t cap, Rng& rng);

// Each pair followed by its order-swapped twin.
std::vector<PairExample> symmetric_augment(const std::vector<PairExample>& pairs);

struct MetaSplits {
    std::vector<PairExample> meta_train;  // already symmetric-augmented
    std::vector<PairExample> meta_it;
    std::vector<PairExample> meta_et;
    std::vector<int> category;  // 1 or 2 per problem
};

// Each problem lands in category 1 or 2 with equal probability (bounded
// retries if a category comes up empty). Category-1 pair pools are shuffled
// and index-split into meta-train / meta-IT, so the two never share a pair;
// category-2 problems feed meta-ET only. No problem contributes more than
// cap pairs to any split.
MetaSplits build_meta_splits(const MetaRepository& repo, std::uint64_t seed,
                             std::size_t cap = 2500);

// Rectifier hidden layers, log-softmax output over {different, same}.
struct BsfNet {
    std::vector<int> layer_sizes = {75, 100, 50, 25, 12, 2};
    std::vector<Matrix> weights;              // out x in per layer
    std::vector<std::vector<double>> biases;  // out per layer
};

// Uniform +-sqrt(6/(fan_in+fan_out)) weights, zero biases.
BsfNet make_bsf_net(std::uint64_t seed,
                    const std::vector<int>& layer_sizes = {75, 100, 50, 25, 12, 2});

// Per-example log-probabilities; exp of each row sums to 1.
Matrix bsf_forward(const BsfNet& net, const Matrix& batch);

struct BsfGradients {
    std::vector<Matrix> weights;
    std::vector<std::vector<double>> biases;
    double mean_nll = 0.0;
};

double bsf_loss(const BsfNet& net, const Matrix& batch, const std::vector<int>& labels);
BsfGradients bsf_gradients(const BsfNet& net, const Matrix& batch,
                           const std::vector<int>& labels);

struct AdadeltaState {
    double rho = 0.9;
    double epsilon = 1e-6;
    std::vector<Matrix> eg2_w, edx2_w;
    std::vector<std::vector<double>> eg2_b, edx2_b;
};

AdadeltaState make_adadelta_state(const BsfNet& net);

// E[g2] <- rho E[g2] + (1-rho) g2; dx = -(sqrt(E[dx2]+eps)/sqrt(E[g2]+eps)) g;
// x <- x + dx; E[dx2] <- rho E[dx2] + (1-rho) dx2. Returns the batch mean NLL.
double adadelta_step(BsfNet& net, AdadeltaState& state, const Matrix& batch,
                     const std::vector<int>& labels);

struct BsfTrainConfig {
    int epochs = 10;
    int batch_size = 250;
};

struct BsfTrainResult {
    BsfNet net;
    std::vector<double> epoch_nll;  // [0] is the pre-training loss
};

BsfTrainResult train_bsf(const MetaSplits& splits, const BsfTrainConfig& cfg,
                         std::uint64_t seed);

// Order-averaged probability that the pair belongs together.
double predict_pair_probability(const BsfNet& net, const PairFeatures& features);

struct BsfPrediction {
    int label = 0;  // 1 iff the averaged probability exceeds 0.5
    double probability = 0.5;
};

BsfPrediction bsf_predict(const BsfNet& net, const Dataset& x, std::size_t i,
                          std::size_t j);

double bsf_accuracy(const BsfNet& net, const std::vector<PairExample>& pairs);

struct MajorityBaseline {
    double mean_accuracy = 0.0;  // weighted by pair counts
    std::vector<std::pair<int, double>> per_problem;
};

// Per problem, the accuracy of always predicting that problem's majority
// pair label.
MajorityBaseline majority_baseline(const std::vector<PairExample>& pairs);

}  // namespace metaclust
