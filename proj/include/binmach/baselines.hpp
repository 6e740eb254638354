#pragma once

#include <cstdint>
#include <vector>

#include "binmach/logic.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

/// Fibonacci LFSR: s_t = c_1 s_{t-1} + ... + c_L s_{t-L} over GF(2).
/// coeffs holds c_1..c_L, fill the first L output bits.
struct LfsrSpec {
  std::vector<uint8_t> coeffs;
  std::vector<uint8_t> fill;

  size_t length() const { return coeffs.size(); }
  size_t tap_count() const;
};

/// First `nbits` output bits of the LFSR (all zeros when L == 0).
std::vector<uint8_t> lfsr_generate(const LfsrSpec& l, size_t nbits);

/// Shortest LFSR whose first k outputs equal the binary input (L == 0 for
/// the all-zero sequence).
LfsrSpec berlekamp_massey(const DigitSequence& a2);

/// Square bit matrix over GF(2), row-major bitsets.
struct Gf2Matrix {
  uint32_t n = 0;
  uint32_t words_per_row = 0;
  std::vector<uint64_t> rows;

  explicit Gf2Matrix(uint32_t size);
  static Gf2Matrix identity(uint32_t size);

  bool get(uint32_t r, uint32_t c) const;
  void set(uint32_t r, uint32_t c, bool v);
  uint32_t row_weight(uint32_t r) const;

  Gf2Matrix mul(const Gf2Matrix& other) const;
  Gf2Matrix pow(uint64_t e) const;

  /// y = M x for a state held as bit-packed words, bit i = state bit i.
  std::vector<uint64_t> apply(const std::vector<uint64_t>& state) const;
};

/// p-step linear update of an LFSR.  State bit i holds output s_{t+i}; the
/// output rows select the p bits emitted per cycle (s_t first) and the
/// matrix is the p-th power of the one-step companion matrix.
struct ParallelLinearMap {
  uint32_t length = 0;
  uint32_t p = 1;
  Gf2Matrix step;
  std::vector<uint32_t> output_bits;  // state bit indices 0..p-1
};

/// Companion matrix of the LFSR's one-step update under the state
/// convention above.
Gf2Matrix companion_matrix(const LfsrSpec& l);

/// Requires 1 <= p <= L.  Register size is unchanged; only the update map
/// is raised to the p-th power.
ParallelLinearMap lfsr_parallelize(const LfsrSpec& l, uint32_t p);

/// First `nbits` bits produced by the parallel map (p per cycle).
std::vector<uint8_t> parallel_generate(const ParallelLinearMap& map,
                                       const std::vector<uint8_t>& fill,
                                       size_t nbits);

/// One Berlekamp-Massey LFSR per p-decimated subsequence (phase j holds the
/// elements at indices i*p + j).
struct DecimationBank {
  uint32_t p = 1;
  std::vector<LfsrSpec> phases;
  uint64_t total_bits = 0;  // sum of phase lengths
};

/// Requires 1 <= p < k.
DecimationBank decimate_synthesis(const DigitSequence& a2, uint32_t p);

/// Interleave the phase outputs back into a single stream of `nbits` bits.
std::vector<uint8_t> bank_generate(const DecimationBank& bank, size_t nbits);

/// Gate/register costs of the classical constructions.  XOR2 count for each
/// emitted linear form is its tap count minus one; LFSRs use no AND gates.
CostReport lfsr_cost(const LfsrSpec& l, UnitCosts costs = {});
CostReport lfsr_cost(const ParallelLinearMap& map, UnitCosts costs = {});
CostReport lfsr_cost(const DecimationBank& bank, UnitCosts costs = {});

}  // namespace binmach
