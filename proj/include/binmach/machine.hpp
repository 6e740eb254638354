#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "binmach/logic.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

enum class DcPolicy { zero, one, minimize };

/// Feedback register with n m-ary stages and an explicit, possibly partial,
/// transition map between state integers (stage j is the j-th base-m digit,
/// stage 0 least significant).  States absent from the map are don't-cares.
/// The emitted digit of a state is its stage-0 value, sampled before the
/// transition.
class MAryMachine {
 public:
  MAryMachine(uint64_t m, uint64_t n, std::map<uint64_t, uint64_t> transitions,
              uint64_t initial);

  uint64_t m() const { return m_; }
  uint64_t n() const { return n_; }
  uint64_t initial() const { return initial_; }
  const std::map<uint64_t, uint64_t>& transitions() const { return transitions_; }

  bool specified(uint64_t state) const { return transitions_.count(state) != 0; }
  uint64_t step(uint64_t state) const;  // throws std::domain_error on don't-cares
  uint64_t output(uint64_t state) const { return state % m_; }
  uint64_t digit(uint64_t state, uint32_t stage) const;

  /// States whose stage-`stage` next-state digit equals `value`, ascending.
  std::vector<uint64_t> i_set(uint32_t stage, uint64_t value) const;

 private:
  uint64_t m_;
  uint64_t n_;
  uint64_t initial_;
  std::map<uint64_t, uint64_t> transitions_;
};

/// Binary machine: n_bits single-bit stages, one Boolean updating function
/// per stage, p output stages.  Each cycle emits the p least significant
/// state bits as a p-bit group, most significant bit of the group first,
/// sampled before the transition.
struct BinaryMachine {
  uint32_t n_bits = 0;
  uint32_t p = 1;
  std::vector<BoolTable> tables;  // tables[b] updates stage b
  DcPolicy dc_policy = DcPolicy::zero;
  uint64_t initial = 0;

  bool is_complete() const;
  uint64_t step(uint64_t state) const;
};

/// Encode an m-ary machine (m a power of two) over binary stages.  State
/// integers are preserved: stage b of the binary machine is bit b of the
/// m-ary state integer, so states need q + ceil(log2 u_max+1) bits where
/// q = log2 m and u_max is the largest state divided by m.  Output uses the
/// q bits of m-ary stage 0, hence p = q.
BinaryMachine binarize(const MAryMachine& mm);

/// Fill every don't-care table entry: zero/one write constants; minimize
/// derives each stage's completion from its minimize_sop cover.
BinaryMachine complete(const BinaryMachine& bm, DcPolicy policy);

/// Emitted digit stream over `cycles` clock ticks starting at the initial
/// state.
DigitSequence run(const MAryMachine& mm, uint64_t cycles);

/// Emitted bit stream (p bits per cycle) over `cycles` clock ticks.
DigitSequence run(const BinaryMachine& bm, uint64_t cycles);

struct MachineCost {
  CostReport report;      // ANF-route gate counts plus register stages
  uint64_t sop_literals;  // secondary metric from minimize_sop
};

/// Cost of a binary machine completed under `policy`: per-stage ANF gate
/// counts summed into a CostReport with register_stages = n_bits, plus the
/// total two-level cover literal count.  With policy minimize, covers see
/// the original don't-care freedom.
MachineCost machine_cost(const BinaryMachine& bm, DcPolicy policy,
                         UnitCosts costs = {});

}  // namespace binmach
