#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace binmach {

/// Finite, non-empty sequence over the alphabet {0, ..., m-1}, m >= 2.
struct DigitSequence {
  uint64_t m = 2;
  std::vector<uint64_t> digits;

  DigitSequence(uint64_t alphabet_size, std::vector<uint64_t> digit_values);

  static DigitSequence from_bits(const std::vector<uint8_t>& bits);
  std::vector<uint8_t> to_bits() const;  // requires m == 2

  size_t size() const { return digits.size(); }
  bool is_binary() const { return m == 2; }
  bool operator==(const DigitSequence&) const = default;
};

/// Occurrence counts N_i of every digit value; absent values have count 0.
struct DigitCounts {
  uint64_t m = 2;
  std::unordered_map<uint64_t, uint64_t> counts;
  uint64_t n_max = 0;  // max_i N_i
  uint64_t total = 0;  // sum of all counts == sequence length

  uint64_t count(uint64_t digit) const {
    auto it = counts.find(digit);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Pre-period k0 and period k of a finite sequence.
///
/// A pair (k0, k) is valid when a_i == a_{i+k} for every i >= k0 with
/// i + k < length, and at least one such i exists.  The report carries the
/// least valid k and, for it, the least k0.  A sequence showing no internal
/// repetition is treated as one full period: (0, length).
struct PeriodReport {
  uint64_t pre_period = 0;
  uint64_t period = 0;
  bool purely_periodic = false;  // pre_period == 0
};

/// Result of grouping a binary sequence into 2^p-ary digits.
struct EncodedSequence {
  DigitSequence seq;
  std::vector<uint8_t> pad;  // bits appended to the tail, possibly empty
  uint32_t p = 1;
};

/// Group a binary sequence into p-bit digits, most significant bit first
/// (digit = a_i*2^(p-1) + ... + a_{i+p-1}).  If the length is not a multiple
/// of p the tail is padded; the pad is chosen by exhaustive search to
/// minimize the resulting max digit count, ties broken toward the
/// lexicographically smallest pad.
EncodedSequence encode_m_ary(const DigitSequence& a2, uint32_t p);

/// Inverse of encode_m_ary: expand each digit of a 2^p-ary sequence into its
/// p bits, most significant first.
DigitSequence decode_m_ary(const DigitSequence& am, uint32_t p);

DigitCounts digit_counts(const DigitSequence& a);

PeriodReport period_analysis(const DigitSequence& a);

/// Deterministic seeded binary sequence.  Draws one 64-bit word per bit from
/// std::mt19937_64 seeded with `seed` and keeps the least significant bit.
DigitSequence gen_random(uint64_t length, uint64_t seed);

/// Legendre sequence of odd prime length: a_0 = 1, a_i = 0 when i is a
/// quadratic residue mod the prime, 1 otherwise.
DigitSequence gen_legendre(uint64_t prime);

/// Complementary pair of order t built by recursive doubling from
/// A = B = (0):  A' = A||B,  B' = A||~B.  Both halves have length 2^t.
std::pair<DigitSequence, DigitSequence> gen_golay_pair(uint32_t order);

}  // namespace binmach
