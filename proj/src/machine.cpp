#include "binmach/machine.hpp"

#include <algorithm>
#include <stdexcept>

#include "binmach/bits.hpp"

namespace binmach {

namespace {

// m^n with overflow guard; the result only has to bound state integers.
uint64_t checked_pow(uint64_t m, uint64_t n) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < n; ++i) {
    if (r > ~uint64_t(0) / m) throw std::invalid_argument("machine state space overflows");
    r *= m;
  }
  return r;
}

}  // namespace

MAryMachine::MAryMachine(uint64_t m, uint64_t n, std::map<uint64_t, uint64_t> transitions,
                         uint64_t initial)
    : m_(m), n_(n), initial_(initial), transitions_(std::move(transitions)) {
  if (m < 2) throw std::invalid_argument("machine radix must be >= 2");
  if (n == 0) throw std::invalid_argument("machine must have at least one stage");
  if (transitions_.empty()) throw std::invalid_argument("machine must specify at least one state");
  const uint64_t space = checked_pow(m, n);
  for (const auto& [cur, next] : transitions_) {
    if (cur >= space || next >= space)
      throw std::invalid_argument("machine transition outside the m^n state space");
  }
  if (!specified(initial_))
    throw std::invalid_argument("machine initial state must be specified");
}

uint64_t MAryMachine::step(uint64_t state) const {
  auto it = transitions_.find(state);
  if (it == transitions_.end())
    throw std::domain_error("step on a don't-care state of an m-ary machine");
  return it->second;
}

uint64_t MAryMachine::digit(uint64_t state, uint32_t stage) const {
  for (uint32_t i = 0; i < stage; ++i) state /= m_;
  return state % m_;
}

std::vector<uint64_t> MAryMachine::i_set(uint32_t stage, uint64_t value) const {
  std::vector<uint64_t> states;
  for (const auto& [cur, next] : transitions_)
    if (digit(next, stage) == value) states.push_back(cur);
  return states;  // map iteration is already ascending
}

bool BinaryMachine::is_complete() const {
  return std::all_of(tables.begin(), tables.end(),
                     [](const BoolTable& t) { return t.is_complete(); });
}

uint64_t BinaryMachine::step(uint64_t state) const {
  if (state >> n_bits)
    throw std::invalid_argument("binary machine state out of range");
  uint64_t next = 0;
  for (uint32_t b = 0; b < n_bits; ++b) {
    uint8_t v = tables[b].values[state];
    if (v == kDontCare) {
      if (dc_policy == DcPolicy::zero)
        v = kFalse;
      else if (dc_policy == DcPolicy::one)
        v = kTrue;
      else
        throw std::domain_error(
            "step on a don't-care state of a binary machine pending minimize completion");
    }
    next |= uint64_t(v) << b;
  }
  return next;
}

BinaryMachine binarize(const MAryMachine& mm) {
  if (!is_power_of_two_u64(mm.m()))
    throw std::invalid_argument("binarize requires the radix to be a power of two");
  const uint32_t q = ceil_log2_u64(mm.m());

  uint64_t u_max = 0;
  for (const auto& [cur, next] : mm.transitions())
    u_max = std::max({u_max, cur >> q, next >> q});
  const uint32_t n_bits = q + ceil_log2_u64(u_max + 1);

  BinaryMachine bm;
  bm.n_bits = n_bits;
  bm.p = q;
  bm.dc_policy = DcPolicy::zero;
  bm.initial = mm.initial();
  bm.tables.assign(n_bits, BoolTable(n_bits, kDontCare));
  for (const auto& [cur, next] : mm.transitions())
    for (uint32_t b = 0; b < n_bits; ++b)
      bm.tables[b].values[cur] = uint8_t((next >> b) & 1);
  return bm;
}

BinaryMachine complete(const BinaryMachine& bm, DcPolicy policy) {
  BinaryMachine out = bm;
  out.dc_policy = policy;
  for (BoolTable& t : out.tables) {
    if (policy == DcPolicy::minimize) {
      const Cover cover = minimize_sop(t);
      for (uint32_t v = 0; v < t.values.size(); ++v) {
        if (t.values[v] != kDontCare) continue;
        bool on = false;
        for (const Cube& c : cover)
          if (c.covers(v)) {
            on = true;
            break;
          }
        t.values[v] = on ? kTrue : kFalse;
      }
    } else {
      const uint8_t fill = policy == DcPolicy::zero ? kFalse : kTrue;
      for (auto& v : t.values)
        if (v == kDontCare) v = fill;
    }
  }
  return out;
}

DigitSequence run(const MAryMachine& mm, uint64_t cycles) {
  if (cycles == 0) throw std::invalid_argument("run requires at least one cycle");
  std::vector<uint64_t> out;
  out.reserve(cycles);
  uint64_t state = mm.initial();
  for (uint64_t c = 0; c < cycles; ++c) {
    out.push_back(mm.output(state));
    state = mm.step(state);
  }
  return DigitSequence(mm.m(), std::move(out));
}

DigitSequence run(const BinaryMachine& bm, uint64_t cycles) {
  if (cycles == 0) throw std::invalid_argument("run requires at least one cycle");
  std::vector<uint64_t> out;
  out.reserve(cycles * bm.p);
  uint64_t state = bm.initial;
  const uint64_t omask = (uint64_t(1) << bm.p) - 1;
  for (uint64_t c = 0; c < cycles; ++c) {
    const uint64_t digit = state & omask;
    for (uint32_t j = 0; j < bm.p; ++j)
      out.push_back((digit >> (bm.p - 1 - j)) & 1);
    state = bm.step(state);
  }
  return DigitSequence(2, std::move(out));
}

MachineCost machine_cost(const BinaryMachine& bm, DcPolicy policy, UnitCosts costs) {
  uint64_t sop_literals = 0;
  BinaryMachine completed = bm;
  completed.dc_policy = policy;

  if (policy == DcPolicy::minimize) {
    // Covers keep the original don't-care freedom and drive the completion.
    for (BoolTable& t : completed.tables) {
      const Cover cover = minimize_sop(t);
      sop_literals += cover_literals(cover);
      for (uint32_t v = 0; v < t.values.size(); ++v) {
        if (t.values[v] != kDontCare) continue;
        bool on = false;
        for (const Cube& c : cover)
          if (c.covers(v)) {
            on = true;
            break;
          }
        t.values[v] = on ? kTrue : kFalse;
      }
    }
  } else {
    completed = complete(bm, policy);
    for (const BoolTable& t : completed.tables)
      sop_literals += cover_literals(minimize_sop(t));
  }

  uint64_t and2 = 0, xor2 = 0;
  for (const BoolTable& t : completed.tables) {
    const auto [a, x] = cost_anf(anf(t));
    and2 += a;
    xor2 += x;
  }
  return MachineCost{make_cost_report(and2, xor2, bm.n_bits, costs), sop_literals};
}

}  // namespace binmach
