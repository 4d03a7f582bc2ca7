#pragma once

#include <cstdint>
#include <string_view>

namespace fedtext {

// FNV-1a, 64-bit. Fixed public constants and no per-process seeding: feature
// buckets must be identical across runs and platforms.
constexpr uint64_t kFnv64OffsetBasis = 14695981039346656037ull;
constexpr uint64_t kFnv64Prime = 1099511628211ull;

constexpr uint64_t fnv1a64(std::string_view bytes, uint64_t state = kFnv64OffsetBasis) {
  uint64_t h = state;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnv64Prime;
  }
  return h;
}

}  // namespace fedtext
