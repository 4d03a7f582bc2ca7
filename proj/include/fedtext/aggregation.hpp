#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fedtext/model.hpp"

namespace fedtext {

enum class FedAvgWeighting { Uniform, BySampleCount };

struct FedAvg {
  FedAvgWeighting weighting = FedAvgWeighting::BySampleCount;
};

// f = tolerated byzantine count; requires n >= f + 3 updates.
struct Krum {
  int f = 1;
};

struct MultiKrum {
  int f = 1;
  int m = 2;  // number of lowest-scored updates to average
};

using AggregationStrategy = std::variant<FedAvg, Krum, MultiKrum>;

struct ClientUpdate {
  int client_id = 0;
  ParameterVector params;
  int64_t sample_count = 1;
};

// Coordinate-wise mean of the updates, summed in client-id order so the
// result is independent of presentation order. The mean is anchored at the
// lowest-id update, so identical inputs average to themselves exactly.
ParameterVector fedavg(std::span<const ClientUpdate> updates, FedAvgWeighting weighting);

// Krum score of update i: sum of squared Euclidean distances to its
// n - f - 2 nearest other updates. Returned for every update, sorted by
// client id.
std::vector<std::pair<int, double>> krum_scores(std::span<const ClientUpdate> updates, int f);

// The update with the minimum Krum score; ties break to the lowest client
// id. Its parameters become the new global model verbatim.
const ClientUpdate& krum_select(std::span<const ClientUpdate> updates, int f);

// Unweighted mean of the m lowest-scored updates. m = 1 reduces to
// krum_select; m = n with f = 0 reduces to uniform fedavg.
ParameterVector multi_krum(std::span<const ClientUpdate> updates, int f, int m);

// Throws std::invalid_argument when the strategy cannot run with n updates.
void validate_feasible(const AggregationStrategy& strategy, int n);

struct AggregateResult {
  ParameterVector params;
  std::optional<int> selected_client;  // set by single Krum only
};

AggregateResult aggregate(std::span<const ClientUpdate> updates,
                          const AggregationStrategy& strategy);

}  // namespace fedtext
