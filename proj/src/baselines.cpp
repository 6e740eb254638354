#include "binmach/baselines.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace binmach {

size_t LfsrSpec::tap_count() const {
  size_t taps = 0;
  for (uint8_t c : coeffs) taps += c;
  return taps;
}

std::vector<uint8_t> lfsr_generate(const LfsrSpec& l, size_t nbits) {
  const size_t L = l.length();
  if (l.fill.size() != L) throw std::invalid_argument("LFSR fill length must equal L");
  std::vector<uint8_t> out(nbits, 0);
  if (L == 0) return out;
  for (size_t t = 0; t < nbits; ++t) {
    if (t < L) {
      out[t] = l.fill[t] & 1;
      continue;
    }
    uint8_t s = 0;
    for (size_t i = 1; i <= L; ++i) s ^= l.coeffs[i - 1] & out[t - i];
    out[t] = s;
  }
  return out;
}

LfsrSpec berlekamp_massey(const DigitSequence& a2) {
  if (a2.m != 2) throw std::invalid_argument("berlekamp_massey expects a binary sequence");
  const std::vector<uint64_t>& s = a2.digits;
  const size_t n = s.size();

  // Connection polynomials as coefficient vectors c[0] = 1, c[i] = c_i.
  std::vector<uint8_t> c{1}, b{1};
  size_t L = 0;
  size_t x = 1;  // steps since b was last updated

  for (size_t t = 0; t < n; ++t) {
    uint8_t d = uint8_t(s[t] & 1);
    for (size_t i = 1; i <= L && i < c.size(); ++i) d ^= c[i] & uint8_t(s[t - i] & 1);
    if (d == 0) {
      ++x;
    } else if (2 * L <= t) {
      std::vector<uint8_t> keep = c;
      if (c.size() < b.size() + x) c.resize(b.size() + x, 0);
      for (size_t i = 0; i < b.size(); ++i) c[i + x] ^= b[i];
      L = t + 1 - L;
      b = std::move(keep);
      x = 1;
    } else {
      if (c.size() < b.size() + x) c.resize(b.size() + x, 0);
      for (size_t i = 0; i < b.size(); ++i) c[i + x] ^= b[i];
      ++x;
    }
  }

  LfsrSpec l;
  l.coeffs.assign(L, 0);
  for (size_t i = 1; i <= L; ++i)
    if (i < c.size()) l.coeffs[i - 1] = c[i];
  l.fill.assign(L, 0);
  for (size_t i = 0; i < L && i < n; ++i) l.fill[i] = uint8_t(s[i] & 1);
  return l;
}

Gf2Matrix::Gf2Matrix(uint32_t size)
    : n(size), words_per_row((size + 63) / 64), rows(size_t(size) * words_per_row, 0) {
  if (size == 0) throw std::invalid_argument("Gf2Matrix requires a positive size");
}

Gf2Matrix Gf2Matrix::identity(uint32_t size) {
  Gf2Matrix m(size);
  for (uint32_t i = 0; i < size; ++i) m.set(i, i, true);
  return m;
}

bool Gf2Matrix::get(uint32_t r, uint32_t c) const {
  return (rows[size_t(r) * words_per_row + c / 64] >> (c % 64)) & 1;
}

void Gf2Matrix::set(uint32_t r, uint32_t c, bool v) {
  uint64_t& w = rows[size_t(r) * words_per_row + c / 64];
  const uint64_t bit = uint64_t(1) << (c % 64);
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

uint32_t Gf2Matrix::row_weight(uint32_t r) const {
  uint32_t weight = 0;
  for (uint32_t w = 0; w < words_per_row; ++w)
    weight += uint32_t(std::popcount(rows[size_t(r) * words_per_row + w]));
  return weight;
}

Gf2Matrix Gf2Matrix::mul(const Gf2Matrix& other) const {
  if (n != other.n) throw std::invalid_argument("Gf2Matrix size mismatch");
  Gf2Matrix out(n);
  for (uint32_t r = 0; r < n; ++r) {
    uint64_t* out_row = &out.rows[size_t(r) * words_per_row];
    for (uint32_t c = 0; c < n; ++c) {
      if (!get(r, c)) continue;
      const uint64_t* other_row = &other.rows[size_t(c) * words_per_row];
      for (uint32_t w = 0; w < words_per_row; ++w) out_row[w] ^= other_row[w];
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::pow(uint64_t e) const {
  Gf2Matrix result = identity(n);
  Gf2Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return result;
}

std::vector<uint64_t> Gf2Matrix::apply(const std::vector<uint64_t>& state) const {
  if (state.size() != words_per_row) throw std::invalid_argument("state width mismatch");
  std::vector<uint64_t> out(words_per_row, 0);
  for (uint32_t r = 0; r < n; ++r) {
    uint64_t acc = 0;
    for (uint32_t w = 0; w < words_per_row; ++w)
      acc ^= rows[size_t(r) * words_per_row + w] & state[w];
    out[r / 64] |= uint64_t(std::popcount(acc) & 1) << (r % 64);
  }
  return out;
}

Gf2Matrix companion_matrix(const LfsrSpec& l) {
  const uint32_t L = uint32_t(l.length());
  if (L == 0) throw std::invalid_argument("companion matrix requires L >= 1");
  Gf2Matrix m(L);
  // State bit i holds s_{t+i}; one step shifts bits down and recomputes the
  // top bit from the feedback taps: s_{t+L} = sum c_i s_{t+L-i}.
  for (uint32_t i = 0; i + 1 < L; ++i) m.set(i, i + 1, true);
  for (uint32_t i = 1; i <= L; ++i)
    if (l.coeffs[i - 1]) m.set(L - 1, L - i, true);
  return m;
}

ParallelLinearMap lfsr_parallelize(const LfsrSpec& l, uint32_t p) {
  const uint32_t L = uint32_t(l.length());
  if (p < 1 || p > L)
    throw std::invalid_argument("parallelization width must satisfy 1 <= p <= L");
  ParallelLinearMap map{L, p, companion_matrix(l).pow(p), {}};
  map.output_bits.resize(p);
  for (uint32_t j = 0; j < p; ++j) map.output_bits[j] = j;
  return map;
}

std::vector<uint8_t> parallel_generate(const ParallelLinearMap& map,
                                       const std::vector<uint8_t>& fill, size_t nbits) {
  if (fill.size() != map.length) throw std::invalid_argument("fill length must equal L");
  std::vector<uint64_t> state(map.step.words_per_row, 0);
  for (uint32_t i = 0; i < map.length; ++i)
    state[i / 64] |= uint64_t(fill[i] & 1) << (i % 64);
  std::vector<uint8_t> out;
  out.reserve(nbits);
  while (out.size() < nbits) {
    for (uint32_t bit : map.output_bits) {
      if (out.size() == nbits) break;
      out.push_back(uint8_t((state[bit / 64] >> (bit % 64)) & 1));
    }
    state = map.step.apply(state);
  }
  return out;
}

DecimationBank decimate_synthesis(const DigitSequence& a2, uint32_t p) {
  if (a2.m != 2) throw std::invalid_argument("decimation expects a binary sequence");
  if (p < 1 || p >= a2.digits.size())
    throw std::invalid_argument("decimation width must satisfy 1 <= p < k");
  DecimationBank bank{p, {}, 0};
  bank.phases.reserve(p);
  for (uint32_t j = 0; j < p; ++j) {
    std::vector<uint64_t> phase;
    for (size_t i = j; i < a2.digits.size(); i += p) phase.push_back(a2.digits[i]);
    bank.phases.push_back(berlekamp_massey(DigitSequence(2, std::move(phase))));
    bank.total_bits += bank.phases.back().length();
  }
  return bank;
}

std::vector<uint8_t> bank_generate(const DecimationBank& bank, size_t nbits) {
  std::vector<std::vector<uint8_t>> streams(bank.p);
  const size_t per_phase = nbits / bank.p + 1;
  for (uint32_t j = 0; j < bank.p; ++j)
    streams[j] = lfsr_generate(bank.phases[j], per_phase);
  std::vector<uint8_t> out;
  out.reserve(nbits);
  for (size_t i = 0; out.size() < nbits; ++i)
    for (uint32_t j = 0; j < bank.p && out.size() < nbits; ++j)
      out.push_back(streams[j][i]);
  return out;
}

CostReport lfsr_cost(const LfsrSpec& l, UnitCosts costs) {
  const size_t taps = l.tap_count();
  const uint64_t xor2 = taps > 0 ? taps - 1 : 0;
  return make_cost_report(0, xor2, l.length(), costs);
}

CostReport lfsr_cost(const ParallelLinearMap& map, UnitCosts costs) {
  uint64_t xor2 = 0;
  for (uint32_t r = 0; r < map.step.n; ++r) {
    const uint32_t weight = map.step.row_weight(r);
    if (weight > 1) xor2 += weight - 1;
  }
  return make_cost_report(0, xor2, map.length, costs);
}

CostReport lfsr_cost(const DecimationBank& bank, UnitCosts costs) {
  uint64_t xor2 = 0;
  uint64_t registers = 0;
  for (const LfsrSpec& l : bank.phases) {
    const size_t taps = l.tap_count();
    if (taps > 1) xor2 += taps - 1;
    registers += l.length();
  }
  return make_cost_report(0, xor2, registers, costs);
}

}  // namespace binmach
