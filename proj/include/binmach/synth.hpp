#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

/// How the per-digit state pools are ordered before consumption.
struct PermutationPolicy {
  enum class Kind { identity, seeded_shuffle };
  Kind kind = Kind::identity;
  uint64_t seed = 0;

  static PermutationPolicy identity() { return {Kind::identity, 0}; }
  static PermutationPolicy shuffle(uint64_t seed) {
    return {Kind::seeded_shuffle, seed};
  }
};

/// One state per sequence element.  Digit value i draws its states from the
/// pool {j*m + i : 0 <= j < N_max}, so every state is congruent to the digit
/// it emits modulo m; each pool element is used at most once.
struct StateAssignment {
  uint64_t m = 2;
  std::vector<uint64_t> states;                       // s_j for element j
  PermutationPolicy policy;
  std::map<uint64_t, std::vector<uint64_t>> pools_used;  // digit -> states taken
};

struct StageBound {
  uint64_t n = 1;      // ceil(log_m N_max) + 1
  uint64_t m = 2;
  uint64_t n_max = 1;
};

StateAssignment assign_states(const DigitSequence& a, PermutationPolicy policy =
                                                          PermutationPolicy::identity());

/// Minimal m-ary stage count for the given digit counts.
StageBound stage_count(const DigitCounts& counts, uint64_t m);

/// Binary stage count of the full pipeline at parallelization p:
/// ceil(log2 N_max) + p, with N_max taken from the padded 2^p-ary encoding.
uint32_t binary_stage_bound(const DigitSequence& a2, uint32_t p);

/// Build the m-ary machine realizing the sequence as one cycle: states from
/// assign_states, transition s_j -> s_{j+1 mod k}, everything else
/// don't-care.  The initial state is s_0.
MAryMachine synthesize_machine(const DigitSequence& a,
                               PermutationPolicy policy = PermutationPolicy::identity());

}  // namespace binmach
