#pragma once

#include <bit>
#include <cstdint>

namespace binmach {

// Smallest e with 2^e >= x (0 for x <= 1).
inline uint32_t ceil_log2_u64(uint64_t x) {
  return x <= 1 ? 0u : static_cast<uint32_t>(std::bit_width(x - 1));
}

inline bool is_power_of_two_u64(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// 64-bit finalizer used to derive independent engine seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace binmach
