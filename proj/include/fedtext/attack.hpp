#pragma once

#include <set>
#include <span>
#include <vector>

#include "fedtext/partition.hpp"

namespace fedtext {

// Label remap table: entry c is the poisoned label for true label c.
struct FlipMap {
  std::vector<int> mapping;

  // First floor(K/2) classes shift up by floor(K/2), the rest stay (for K=20:
  // classes 0-9 flip onto 10-19).
  static FlipMap default_map(int num_classes);

  int apply(int label) const { return mapping[static_cast<size_t>(label)]; }
  void validate(int num_classes) const;
};

struct AttackSpec {
  std::set<int> toxic_clients;
  FlipMap flip_map;
};

enum class AttackRatio { None, Percent25, Percent50 };

// Replaces every label in the toxic shards by flip_map[label] and marks them
// attacked; texts and shard sizes never change.
std::vector<ClientShard> apply_attack(std::vector<ClientShard> shards, const AttackSpec& spec);

// Language rule for Non-IID setups: 25% poisons the client holding English,
// 50% the clients holding English and French. Missing languages fall back to
// the lowest unused client ids.
AttackSpec noniid_attack_assignment(std::span<const ClientShard> shards, AttackRatio ratio,
                                    const FlipMap& flip_map);

// IID shorthand: the lowest client ids, count = ratio of n rounded to
// nearest (at least one when the ratio is nonzero).
AttackSpec iid_attack_assignment(int num_clients, AttackRatio ratio, const FlipMap& flip_map);

}  // namespace fedtext
