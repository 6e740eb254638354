#include "binmach/synth.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "binmach/bits.hpp"

namespace binmach {

namespace {

// Hands out the elements of one residue pool {j*m + i : 0 <= j < n_max} in a
// policy-defined order.  Identity order is the natural j = 0, 1, 2, ...;
// seeded shuffle draws without replacement via a partial Fisher-Yates over a
// virtual array, touching only as many slots as the digit actually needs.
class PoolDealer {
 public:
  PoolDealer(uint64_t m, uint64_t digit, uint64_t pool_size, PermutationPolicy policy)
      : m_(m), digit_(digit), pool_size_(pool_size) {
    if (policy.kind == PermutationPolicy::Kind::seeded_shuffle)
      eng_.emplace(mix64(policy.seed ^ mix64(digit + 1)));
  }

  uint64_t next() {
    if (next_index_ >= pool_size_)
      throw std::logic_error("residue pool exhausted");
    uint64_t j = next_index_;
    if (eng_) {
      std::uniform_int_distribution<uint64_t> pick(next_index_, pool_size_ - 1);
      const uint64_t r = pick(*eng_);
      const uint64_t here = slot(next_index_);
      slots_[next_index_] = slot(r);
      slots_[r] = here;
      j = slots_[next_index_];
    }
    ++next_index_;
    return j * m_ + digit_;
  }

 private:
  uint64_t slot(uint64_t idx) const {
    auto it = slots_.find(idx);
    return it == slots_.end() ? idx : it->second;
  }

  uint64_t m_;
  uint64_t digit_;
  uint64_t pool_size_;
  uint64_t next_index_ = 0;
  std::optional<std::mt19937_64> eng_;
  std::unordered_map<uint64_t, uint64_t> slots_;
};

}  // namespace

StateAssignment assign_states(const DigitSequence& a, PermutationPolicy policy) {
  const DigitCounts counts = digit_counts(a);
  StateAssignment sa;
  sa.m = a.m;
  sa.policy = policy;
  sa.states.reserve(a.digits.size());

  std::unordered_map<uint64_t, PoolDealer> dealers;
  dealers.reserve(counts.counts.size());
  for (uint64_t digit : a.digits) {
    auto it = dealers.find(digit);
    if (it == dealers.end())
      it = dealers.emplace(digit, PoolDealer(a.m, digit, counts.n_max, policy)).first;
    const uint64_t s = it->second.next();
    sa.states.push_back(s);
    sa.pools_used[digit].push_back(s);
  }
  return sa;
}

StageBound stage_count(const DigitCounts& counts, uint64_t m) {
  if (m < 2) throw std::invalid_argument("stage_count requires radix >= 2");
  if (counts.n_max == 0) throw std::invalid_argument("stage_count requires a nonempty sequence");
  // Smallest t with m^t >= n_max, plus the output stage.
  uint64_t t = 0;
  uint64_t reach = 1;
  while (reach < counts.n_max) {
    if (reach > ~uint64_t(0) / m) {
      ++t;
      break;
    }
    reach *= m;
    ++t;
  }
  return StageBound{t + 1, m, counts.n_max};
}

uint32_t binary_stage_bound(const DigitSequence& a2, uint32_t p) {
  const EncodedSequence enc = encode_m_ary(a2, p);
  const DigitCounts counts = digit_counts(enc.seq);
  return p + ceil_log2_u64(counts.n_max);
}

MAryMachine synthesize_machine(const DigitSequence& a, PermutationPolicy policy) {
  const StateAssignment sa = assign_states(a, policy);
  const size_t k = sa.states.size();
  std::map<uint64_t, uint64_t> transitions;
  for (size_t j = 0; j < k; ++j)
    transitions[sa.states[j]] = sa.states[(j + 1) % k];
  const StageBound bound = stage_count(digit_counts(a), a.m);
  return MAryMachine(a.m, bound.n, std::move(transitions), sa.states[0]);
}

}  // namespace binmach
