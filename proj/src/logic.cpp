#include "binmach/logic.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace binmach {

namespace {

constexpr uint32_t kMaxInputs = 24;

void check_inputs(uint32_t inputs) {
  if (inputs > kMaxInputs)
    throw std::invalid_argument("tables above 24 inputs are unsupported");
}

}  // namespace

BoolTable::BoolTable(uint32_t inputs, uint8_t fill)
    : num_inputs(inputs), values(size_t(1) << inputs, fill) {
  check_inputs(inputs);
  if (fill > kDontCare) throw std::invalid_argument("table value must be 0, 1 or dc");
}

BoolTable::BoolTable(uint32_t inputs, std::vector<uint8_t> vals)
    : num_inputs(inputs), values(std::move(vals)) {
  check_inputs(inputs);
  if (values.size() != (size_t(1) << inputs))
    throw std::invalid_argument("table size must be 2^num_inputs");
  for (uint8_t v : values)
    if (v > kDontCare) throw std::invalid_argument("table value must be 0, 1 or dc");
}

void BoolTable::set(uint32_t vertex, uint8_t value) {
  if (value > kDontCare) throw std::invalid_argument("table value must be 0, 1 or dc");
  values.at(vertex) = value;
}

bool BoolTable::is_complete() const {
  return std::none_of(values.begin(), values.end(),
                      [](uint8_t v) { return v == kDontCare; });
}

std::vector<uint32_t> BoolTable::on_set() const {
  std::vector<uint32_t> r;
  for (uint32_t v = 0; v < values.size(); ++v)
    if (values[v] == kTrue) r.push_back(v);
  return r;
}

std::vector<uint32_t> BoolTable::off_set() const {
  std::vector<uint32_t> r;
  for (uint32_t v = 0; v < values.size(); ++v)
    if (values[v] == kFalse) r.push_back(v);
  return r;
}

std::vector<uint32_t> BoolTable::dc_set() const {
  std::vector<uint32_t> r;
  for (uint32_t v = 0; v < values.size(); ++v)
    if (values[v] == kDontCare) r.push_back(v);
  return r;
}

bool AnfPoly::eval(uint32_t vertex) const {
  bool acc = false;
  for (uint32_t mon : monomials)
    if ((vertex & mon) == mon) acc = !acc;
  return acc;
}

uint32_t Cube::literal_count() const { return uint32_t(std::popcount(care)); }

CostReport make_cost_report(uint64_t and2, uint64_t xor2, uint64_t registers,
                            UnitCosts costs) {
  CostReport r;
  r.and2_count = and2;
  r.xor2_count = xor2;
  r.register_stages = registers;
  r.unit_costs = costs;
  r.total_units = and2 * costs.and2 + xor2 * costs.xor2 + registers * costs.reg;
  return r;
}

AnfPoly anf(const BoolTable& t) {
  if (!t.is_complete())
    throw std::invalid_argument("anf requires a completely specified table");
  std::vector<uint8_t> coef(t.values);
  const uint32_t v = t.num_inputs;
  for (uint32_t i = 0; i < v; ++i) {
    const uint32_t bit = uint32_t(1) << i;
    for (uint32_t x = 0; x < coef.size(); ++x)
      if (x & bit) coef[x] ^= coef[x ^ bit];
  }
  AnfPoly poly;
  poly.num_inputs = v;
  for (uint32_t x = 0; x < coef.size(); ++x)
    if (coef[x]) poly.monomials.push_back(x);
  return poly;
}

std::pair<uint64_t, uint64_t> cost_anf(const AnfPoly& poly) {
  uint64_t and2 = 0;
  for (uint32_t mon : poly.monomials) {
    const uint32_t deg = uint32_t(std::popcount(mon));
    if (deg >= 2) and2 += deg - 1;
  }
  const uint64_t xor2 = poly.monomials.empty() ? 0 : poly.monomials.size() - 1;
  return {and2, xor2};
}

namespace {

// Does the cube hit any vertex rejected by `allowed`?  Enumerates the cube's
// vertices over its free inputs with early exit.
template <typename AllowedFn>
bool cube_all_allowed(const Cube& cube, uint32_t num_inputs, AllowedFn allowed) {
  std::vector<uint32_t> free_bits;
  for (uint32_t i = 0; i < num_inputs; ++i)
    if (!(cube.care & (uint32_t(1) << i))) free_bits.push_back(i);
  const uint64_t combos = uint64_t(1) << free_bits.size();
  for (uint64_t c = 0; c < combos; ++c) {
    uint32_t vertex = cube.value;
    for (size_t b = 0; b < free_bits.size(); ++b)
      if (c & (uint64_t(1) << b)) vertex |= uint32_t(1) << free_bits[b];
    if (!allowed(vertex)) return false;
  }
  return true;
}

// Greedy expansion: drop literals in fixed input order while the cube stays
// inside allowed territory.  The result is prime by construction.
template <typename AllowedFn>
Cube expand_cube(Cube cube, uint32_t num_inputs, AllowedFn allowed) {
  for (uint32_t i = 0; i < num_inputs; ++i) {
    const uint32_t bit = uint32_t(1) << i;
    if (!(cube.care & bit)) continue;
    // Only the newly reachable half (input i flipped) needs checking.
    Cube half = cube;
    half.value ^= bit;
    if (cube_all_allowed(half, num_inputs, allowed)) {
      cube.care &= ~bit;
      cube.value &= ~bit;
    }
  }
  return cube;
}

void drop_redundant(Cover& cover, const std::vector<uint32_t>& on) {
  for (size_t i = 0; i < cover.size();) {
    bool removable = true;
    for (uint32_t vertex : on) {
      if (!cover[i].covers(vertex)) continue;
      bool elsewhere = false;
      for (size_t j = 0; j < cover.size() && !elsewhere; ++j)
        if (j != i && cover[j].covers(vertex)) elsewhere = true;
      if (!elsewhere) {
        removable = false;
        break;
      }
    }
    if (removable)
      cover.erase(cover.begin() + std::ptrdiff_t(i));
    else
      ++i;
  }
}

template <typename AllowedFn>
Cover greedy_cover(const std::vector<uint32_t>& on, uint32_t num_inputs,
                   AllowedFn allowed) {
  const uint32_t full = num_inputs == 32 ? ~uint32_t(0)
                                         : (uint32_t(1) << num_inputs) - 1;
  Cover cover;
  for (uint32_t t : on) {
    bool covered = false;
    for (const Cube& c : cover)
      if (c.covers(t)) {
        covered = true;
        break;
      }
    if (covered) continue;
    cover.push_back(expand_cube(Cube{full, t}, num_inputs, allowed));
  }
  drop_redundant(cover, on);
  return cover;
}

template <typename AllowedFn>
Cover reexpand(Cover cover, uint32_t num_inputs, const std::vector<uint32_t>& on,
               AllowedFn allowed) {
  for (Cube& c : cover) c = expand_cube(c, num_inputs, allowed);
  drop_redundant(cover, on);
  return cover;
}

}  // namespace

Cover minimize_sop(const BoolTable& t) {
  check_inputs(t.num_inputs);
  const auto on = t.on_set();
  if (on.empty()) return {};

  auto allowed_dc = [&t](uint32_t v) { return t.values[v] != kFalse; };
  Cover dc_aware = greedy_cover(on, t.num_inputs, allowed_dc);
  if (t.is_complete()) return dc_aware;

  // Second candidate: treat don't-cares as off first, then re-expand with
  // the real freedom.  Its literal count never exceeds the zero-filled
  // cover's, which keeps don't-care freedom from ever costing literals.
  auto allowed_zero = [&t](uint32_t v) { return t.values[v] == kTrue; };
  Cover refit = reexpand(greedy_cover(on, t.num_inputs, allowed_zero),
                         t.num_inputs, on, allowed_dc);

  const uint64_t lits_a = cover_literals(dc_aware);
  const uint64_t lits_b = cover_literals(refit);
  if (lits_b < lits_a || (lits_b == lits_a && refit.size() < dc_aware.size()))
    return refit;
  return dc_aware;
}

uint64_t cover_literals(const Cover& cover) {
  uint64_t n = 0;
  for (const Cube& c : cover) n += c.literal_count();
  return n;
}

namespace {

std::string pla_pattern(uint32_t bits, uint32_t care, uint32_t num_inputs) {
  std::string s(num_inputs, '-');
  for (uint32_t i = 0; i < num_inputs; ++i) {
    const uint32_t bit = uint32_t(1) << i;
    if (care & bit) s[i] = (bits & bit) ? '1' : '0';
  }
  return s;
}

std::string pla_header(uint32_t num_inputs, size_t rows) {
  std::ostringstream os;
  os << ".i " << num_inputs << "\n.o 1\n.type fr\n.p " << rows << "\n";
  return os.str();
}

}  // namespace

std::string export_pla(const BoolTable& t) {
  const uint32_t full = t.num_inputs == 32 ? ~uint32_t(0)
                                           : (uint32_t(1) << t.num_inputs) - 1;
  size_t rows = 0;
  for (uint8_t v : t.values)
    if (v != kDontCare) ++rows;
  std::string out = pla_header(t.num_inputs, rows);
  for (uint32_t vertex = 0; vertex < t.values.size(); ++vertex) {
    if (t.values[vertex] == kDontCare) continue;
    out += pla_pattern(vertex, full, t.num_inputs);
    out += t.values[vertex] == kTrue ? " 1\n" : " 0\n";
  }
  out += ".e\n";
  return out;
}

std::string export_pla(const Cover& cover, uint32_t num_inputs) {
  check_inputs(num_inputs);
  std::string out = pla_header(num_inputs, cover.size());
  for (const Cube& c : cover) {
    out += pla_pattern(c.value, c.care, num_inputs);
    out += " 1\n";
  }
  out += ".e\n";
  return out;
}

BoolTable parse_pla(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int num_inputs = -1;
  std::vector<std::pair<std::string, char>> rows;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == ".i") {
      if (!(ls >> num_inputs) || num_inputs < 0 || num_inputs > int(kMaxInputs))
        throw std::invalid_argument("pla: bad .i line");
    } else if (tok == ".o" || tok == ".p" || tok == ".type") {
      continue;  // single output assumed; .p is advisory
    } else if (tok == ".e") {
      break;
    } else {
      std::string out;
      if (!(ls >> out) || out.size() != 1 || (out[0] != '0' && out[0] != '1'))
        throw std::invalid_argument("pla: bad row output");
      rows.emplace_back(tok, out[0]);
    }
  }
  if (num_inputs < 0) throw std::invalid_argument("pla: missing .i line");

  BoolTable t(uint32_t(num_inputs), kDontCare);
  for (const auto& [pattern, outc] : rows) {
    if (pattern.size() != size_t(num_inputs))
      throw std::invalid_argument("pla: row width does not match .i");
    Cube cube{0, 0};
    for (uint32_t i = 0; i < uint32_t(num_inputs); ++i) {
      const uint32_t bit = uint32_t(1) << i;
      if (pattern[i] == '1') {
        cube.care |= bit;
        cube.value |= bit;
      } else if (pattern[i] == '0') {
        cube.care |= bit;
      } else if (pattern[i] != '-') {
        throw std::invalid_argument("pla: bad pattern character");
      }
    }
    const uint8_t val = outc == '1' ? kTrue : kFalse;
    std::vector<uint32_t> free_bits;
    for (uint32_t i = 0; i < uint32_t(num_inputs); ++i)
      if (!(cube.care & (uint32_t(1) << i))) free_bits.push_back(i);
    for (uint64_t c = 0; c < (uint64_t(1) << free_bits.size()); ++c) {
      uint32_t vertex = cube.value;
      for (size_t b = 0; b < free_bits.size(); ++b)
        if (c & (uint64_t(1) << b)) vertex |= uint32_t(1) << free_bits[b];
      if (t.values[vertex] != kDontCare && t.values[vertex] != val)
        throw std::invalid_argument("pla: conflicting rows");
      t.values[vertex] = val;
    }
  }
  return t;
}

}  // namespace binmach
