#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fedtext {

// Sparse hashed bag-of-words features. Indices are strictly increasing and
// values are positive counts.
struct FeatureVector {
  std::vector<uint32_t> indices;
  std::vector<double> values;
  uint32_t dim = 0;

  size_t nnz() const { return indices.size(); }
};

struct ParamLayout {
  uint32_t dim = 0;      // feature dimension D
  uint32_t classes = 0;  // class count K

  size_t size() const { return static_cast<size_t>(dim) * classes + classes; }
  bool operator==(const ParamLayout&) const = default;
};

// Flat weights of a multinomial logistic model: class-major weight matrix
// (classes x dim, row-major) followed by one bias per class. This is the unit
// exchanged between clients and server and the payload unit for byte
// accounting.
struct ParameterVector {
  ParamLayout layout;
  std::vector<double> weights;

  static ParameterVector zeros(ParamLayout layout);

  double weight(uint32_t k, uint32_t d) const {
    return weights[static_cast<size_t>(k) * layout.dim + d];
  }
  double& weight(uint32_t k, uint32_t d) {
    return weights[static_cast<size_t>(k) * layout.dim + d];
  }
  double bias(uint32_t k) const {
    return weights[static_cast<size_t>(layout.dim) * layout.classes + k];
  }
  double& bias(uint32_t k) {
    return weights[static_cast<size_t>(layout.dim) * layout.classes + k];
  }
};

bool all_finite(const ParameterVector& params);

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 1;
  int batch_size = 32;
  double l2 = 0.0;
  uint64_t seed = 0;
};

using LabeledFeature = std::pair<FeatureVector, int>;

// Hashed unigram + adjacent-bigram counts. `dim` must be a power of two
// >= 2; buckets come from FNV-1a 64 modulo dim and collisions accumulate.
FeatureVector featurize(std::string_view preprocessed_text, uint32_t dim);

// Softmax class probabilities; entries are positive and sum to 1.
std::vector<double> predict(const ParameterVector& params, const FeatureVector& x);

struct LossGrad {
  double loss = 0.0;
  ParameterVector grad;
};

// Mean cross-entropy over the batch plus l2/2 * ||W||^2 (biases excluded from
// the penalty), with the exact analytic gradient in the same layout.
LossGrad loss_and_gradient(const ParameterVector& params,
                           std::span<const LabeledFeature> batch, double l2 = 0.0);

double mean_loss(const ParameterVector& params, std::span<const LabeledFeature> data,
                 double l2 = 0.0);

// Mini-batch SGD for cfg.epochs passes with per-epoch Fisher-Yates shuffling
// driven by cfg.seed. `start` is not mutated; the result is bit-identical for
// identical (start, data order, cfg).
ParameterVector local_train(const ParameterVector& start,
                            std::span<const LabeledFeature> data, const TrainConfig& cfg);

// Checkpoint format: 16-byte header (magic "FTPV", u32 dim, u32 classes, 4
// reserved zero bytes) followed by dim*classes+classes doubles, all
// little-endian.
size_t serialized_size(const ParamLayout& layout);
std::vector<uint8_t> serialize_params(const ParameterVector& params);
ParameterVector deserialize_params(std::span<const uint8_t> bytes);
void save_params(const ParameterVector& params, const std::filesystem::path& path);
ParameterVector load_params(const std::filesystem::path& path);

}  // namespace fedtext
