#include "binmach/sequence.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "binmach/bits.hpp"

namespace binmach {

DigitSequence::DigitSequence(uint64_t alphabet_size, std::vector<uint64_t> digit_values)
    : m(alphabet_size), digits(std::move(digit_values)) {
  if (m < 2) throw std::invalid_argument("sequence alphabet must have m >= 2");
  if (digits.empty()) throw std::invalid_argument("sequence must be non-empty");
  for (uint64_t d : digits)
    if (d >= m) throw std::invalid_argument("sequence digit out of range for alphabet");
}

DigitSequence DigitSequence::from_bits(const std::vector<uint8_t>& bits) {
  std::vector<uint64_t> d(bits.begin(), bits.end());
  return DigitSequence(2, std::move(d));
}

std::vector<uint8_t> DigitSequence::to_bits() const {
  if (!is_binary()) throw std::invalid_argument("to_bits requires a binary sequence");
  return std::vector<uint8_t>(digits.begin(), digits.end());
}

EncodedSequence encode_m_ary(const DigitSequence& a2, uint32_t p) {
  if (!a2.is_binary()) throw std::invalid_argument("encode_m_ary takes a binary sequence");
  if (p == 0) throw std::invalid_argument("parallelization degree must be >= 1");
  if (p > 32) throw std::invalid_argument("parallelization degree above 32 is unsupported");

  const size_t k = a2.size();
  const uint64_t m = uint64_t(1) << p;
  const size_t n_digits = (k + p - 1) / p;
  const size_t pad_len = n_digits * p - k;

  std::vector<uint64_t> digits;
  digits.reserve(n_digits);
  const size_t n_full = pad_len == 0 ? n_digits : n_digits - 1;
  for (size_t j = 0; j < n_full; ++j) {
    uint64_t v = 0;
    for (uint32_t b = 0; b < p; ++b) v = (v << 1) | a2.digits[j * p + b];
    digits.push_back(v);
  }

  std::vector<uint8_t> pad;
  if (pad_len > 0) {
    // Only the final digit depends on the pad; count the fixed digits once
    // and try every pad value in lexicographic (== numeric) order.
    std::unordered_map<uint64_t, uint64_t> fixed;
    uint64_t n_max_fixed = 0;
    for (uint64_t v : digits) n_max_fixed = std::max(n_max_fixed, ++fixed[v]);

    uint64_t head = 0;  // the k mod p real bits of the last digit
    for (size_t i = n_full * p; i < k; ++i) head = (head << 1) | a2.digits[i];

    uint64_t best_pad = 0;
    uint64_t best_n_max = ~uint64_t(0);
    const uint64_t pad_limit = uint64_t(1) << pad_len;
    for (uint64_t cand = 0; cand < pad_limit; ++cand) {
      const uint64_t digit = (head << pad_len) | cand;
      auto it = fixed.find(digit);
      const uint64_t occ = (it == fixed.end() ? 0 : it->second) + 1;
      const uint64_t cand_n_max = std::max(n_max_fixed, occ);
      if (cand_n_max < best_n_max) {
        best_n_max = cand_n_max;
        best_pad = cand;
      }
    }
    digits.push_back((head << pad_len) | best_pad);
    pad.resize(pad_len);
    for (size_t j = 0; j < pad_len; ++j)
      pad[j] = uint8_t((best_pad >> (pad_len - 1 - j)) & 1);
  }

  return EncodedSequence{DigitSequence(m, std::move(digits)), std::move(pad), p};
}

DigitSequence decode_m_ary(const DigitSequence& am, uint32_t p) {
  if (p == 0 || p > 32) throw std::invalid_argument("parallelization degree out of range");
  if (am.m != (uint64_t(1) << p))
    throw std::invalid_argument("decode_m_ary requires m == 2^p");
  std::vector<uint64_t> bits;
  bits.reserve(am.size() * p);
  for (uint64_t d : am.digits)
    for (uint32_t b = 0; b < p; ++b) bits.push_back((d >> (p - 1 - b)) & 1);
  return DigitSequence(2, std::move(bits));
}

DigitCounts digit_counts(const DigitSequence& a) {
  DigitCounts c;
  c.m = a.m;
  c.total = a.size();
  for (uint64_t d : a.digits) c.n_max = std::max(c.n_max, ++c.counts[d]);
  return c;
}

PeriodReport period_analysis(const DigitSequence& a) {
  const auto& d = a.digits;
  const size_t n = d.size();
  // Least k where some k0 with k0 + k < n validates; scanning candidate
  // mismatches from the tail makes the common reject case O(1).
  for (size_t k = 1; k + 1 <= n; ++k) {
    size_t last_mismatch = SIZE_MAX;  // none
    for (size_t i = n - k; i-- > 0;) {
      if (d[i] != d[i + k]) {
        last_mismatch = i;
        break;
      }
    }
    const size_t k0 = last_mismatch == SIZE_MAX ? 0 : last_mismatch + 1;
    if (k0 + k < n) return PeriodReport{k0, k, k0 == 0};
  }
  // No repetition visible: the sequence is one full period.
  return PeriodReport{0, n, true};
}

DigitSequence gen_random(uint64_t length, uint64_t seed) {
  if (length == 0) throw std::invalid_argument("random sequence length must be >= 1");
  std::mt19937_64 eng(seed);
  std::vector<uint64_t> bits(length);
  for (auto& b : bits) b = eng() & 1;
  return DigitSequence(2, std::move(bits));
}

namespace {

bool is_odd_prime(uint64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t mod) {
  return (a % mod) * (b % mod) % mod;  // mod < 2^31 keeps the product in range
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

}  // namespace

DigitSequence gen_legendre(uint64_t prime) {
  if (prime >= (uint64_t(1) << 31) || !is_odd_prime(prime))
    throw std::invalid_argument("Legendre sequence length must be an odd prime below 2^31");
  std::vector<uint64_t> bits(prime);
  bits[0] = 1;
  const uint64_t e = (prime - 1) / 2;
  for (uint64_t i = 1; i < prime; ++i)
    bits[i] = pow_mod(i, e, prime) == 1 ? 0 : 1;  // Euler's criterion
  return DigitSequence(2, std::move(bits));
}

std::pair<DigitSequence, DigitSequence> gen_golay_pair(uint32_t order) {
  if (order > 24) throw std::invalid_argument("complementary pair order above 24 is unsupported");
  std::vector<uint64_t> a{0}, b{0};
  for (uint32_t t = 0; t < order; ++t) {
    std::vector<uint64_t> na(a), nb(a);
    na.insert(na.end(), b.begin(), b.end());
    for (uint64_t bit : b) nb.push_back(bit ^ 1);
    a = std::move(na);
    b = std::move(nb);
  }
  return {DigitSequence(2, std::move(a)), DigitSequence(2, std::move(b))};
}

}  // namespace binmach
