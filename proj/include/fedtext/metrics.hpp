#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fedtext/data.hpp"
#include "fedtext/model.hpp"

namespace fedtext {

// counts[true * K + predicted]
struct ConfusionMatrix {
  int num_classes = 0;
  std::vector<int64_t> counts;

  explicit ConfusionMatrix(int k = 0)
      : num_classes(k), counts(static_cast<size_t>(k) * k, 0) {}

  int64_t& at(int true_class, int predicted) {
    return counts[static_cast<size_t>(true_class) * num_classes + predicted];
  }
  int64_t at(int true_class, int predicted) const {
    return counts[static_cast<size_t>(true_class) * num_classes + predicted];
  }
  int64_t total() const;
  int64_t trace() const;
};

struct Metrics {
  double accuracy = 0.0;
  double micro_f1 = 0.0;
  double macro_f1 = 0.0;
  std::vector<double> per_class_f1;
  std::vector<int64_t> support;  // true-class counts
};

// Argmax predictions over the dataset; ties break to the lowest class index.
ConfusionMatrix evaluate(const ParameterVector& params, const Dataset& data);

// Mean per-class F1 over all K classes. A class with zero predicted and zero
// true instances contributes F1 = 0 and still counts in the denominator.
double macro_f1(const ConfusionMatrix& cm);

// Globally pooled F1; equals trace/total (= accuracy) for single-label
// multiclass, and is computed as such so the identity is exact.
double micro_f1(const ConfusionMatrix& cm);

Metrics compute_metrics(const ConfusionMatrix& cm);

// Evaluation restricted to each language present in `data`.
std::map<std::string, Metrics> per_language_eval(const ParameterVector& params,
                                                 const Dataset& data);

}  // namespace fedtext
