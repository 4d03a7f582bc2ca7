#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fedtext/aggregation.hpp"
#include "fedtext/attack.hpp"
#include "fedtext/metrics.hpp"
#include "fedtext/rng.hpp"

namespace fedtext {

struct FLConfig {
  int rounds = 5;
  int local_epochs = 1;
  AggregationStrategy strategy = FedAvg{};
  TrainConfig train;
  uint64_t seed = 0;
  // 0 = hardware concurrency. Results never depend on this.
  int max_parallel_clients = 0;
};

struct RoundRecord {
  int round_index = 0;  // 1-based
  std::optional<int> selected_client;
  Metrics global_eval;
  std::vector<double> per_client_loss;  // client-id order, post-training local loss
  int64_t payload_bytes_per_client = 0;
  double wall_ms = 0.0;
};

struct FLResult {
  ParameterVector model;
  std::vector<RoundRecord> rounds;
};

using RoundCallback = std::function<void(const RoundRecord&)>;

// Per-client seed for one round. Hash-derived so adding clients or rounds
// does not perturb other clients' data order.
inline uint64_t derive_client_seed(uint64_t seed, int round_index, int client_id) {
  return mix_seed(mix_seed(seed, static_cast<uint64_t>(round_index)),
                  static_cast<uint64_t>(client_id));
}

// The federated loop: broadcast the global model, train every client locally
// (possibly in parallel), aggregate per cfg.strategy, evaluate, repeat for
// cfg.rounds. Bit-identical output for a fixed config, at any parallelism.
FLResult run_fl(const ParameterVector& global0, std::span<const ClientShard> shards,
                const FLConfig& cfg, const Dataset& eval_data,
                const RoundCallback& on_round = {});

struct CentralizedResult {
  ParameterVector model;
  Metrics eval;
};

// Plain training on pooled data (the Baseline and Finetuned stages).
// epochs = 0 evaluates `start` unchanged.
CentralizedResult run_centralized(const ParameterVector& start, const Dataset& data,
                                  int epochs, TrainConfig train, const Dataset& eval_data);

// Uplink bytes for one client over `rounds` rounds (one update per round).
int64_t payload_estimate(int64_t serialized_bytes, int rounds);
int64_t payload_estimate(const ParameterVector& params, int rounds);

}  // namespace fedtext
