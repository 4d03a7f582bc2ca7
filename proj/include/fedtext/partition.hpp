#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fedtext/data.hpp"

namespace fedtext {

// One client's local training data. `attacked` is set by the attack module.
struct ClientShard {
  int client_id = 0;
  std::vector<Example> examples;
  bool attacked = false;
  int num_classes = 0;
};

// Shuffles by seed, then deals round-robin into `num_clients` disjoint shards
// whose sizes differ by at most one.
std::vector<ClientShard> partition_iid(const Dataset& data, int num_clients, uint64_t seed);

// Shard i holds exactly the examples whose language maps to i, in original
// order. Client ids in the assignment must form a contiguous range [0, n);
// every language present in the data must be assigned, and every client must
// end up with at least one example.
std::vector<ClientShard> partition_noniid(const Dataset& data,
                                          const std::map<std::string, int>& assignment);

// Concatenation in client-id order (the centralized pooled baseline).
Dataset pool(std::span<const ClientShard> shards);

}  // namespace fedtext
