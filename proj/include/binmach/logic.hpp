#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace binmach {

inline constexpr uint8_t kFalse = 0;
inline constexpr uint8_t kTrue = 1;
inline constexpr uint8_t kDontCare = 2;

/// Dense truth table of a single-output Boolean function over v inputs.
/// Entry at index `vertex` holds the value at the assignment whose bit i is
/// the value of input x_i.
struct BoolTable {
  uint32_t num_inputs = 0;
  std::vector<uint8_t> values;  // 2^num_inputs entries of {0, 1, dc}

  BoolTable() = default;
  explicit BoolTable(uint32_t inputs, uint8_t fill = kDontCare);
  BoolTable(uint32_t inputs, std::vector<uint8_t> vals);

  size_t size() const { return values.size(); }
  uint8_t at(uint32_t vertex) const { return values[vertex]; }
  void set(uint32_t vertex, uint8_t value);
  bool is_complete() const;

  std::vector<uint32_t> on_set() const;
  std::vector<uint32_t> off_set() const;
  std::vector<uint32_t> dc_set() const;

  bool operator==(const BoolTable&) const = default;
};

/// Algebraic normal form: XOR of positive-polarity monomials.  Each monomial
/// is a variable mask; mask 0 is the constant 1.
struct AnfPoly {
  uint32_t num_inputs = 0;
  std::vector<uint32_t> monomials;  // sorted ascending, no duplicates

  bool eval(uint32_t vertex) const;
};

/// Product term over {0, 1, -}: `care` masks the bound inputs, `value` their
/// polarities (bits outside `care` are zero).
struct Cube {
  uint32_t care = 0;
  uint32_t value = 0;

  bool covers(uint32_t vertex) const { return (vertex & care) == value; }
  uint32_t literal_count() const;
  bool operator==(const Cube&) const = default;
};

using Cover = std::vector<Cube>;

struct UnitCosts {
  uint64_t and2 = 1;
  uint64_t xor2 = 1;
  uint64_t reg = 2;
};

struct CostReport {
  uint64_t and2_count = 0;
  uint64_t xor2_count = 0;
  uint64_t register_stages = 0;
  UnitCosts unit_costs{};
  uint64_t total_units = 0;
};

CostReport make_cost_report(uint64_t and2, uint64_t xor2, uint64_t registers,
                            UnitCosts costs = {});

/// Exact ANF of a completely specified table (Moebius transform).
AnfPoly anf(const BoolTable& t);

/// Two-input gate count of an ANF: (and2, xor2).  A monomial of degree d
/// takes d-1 AND2 gates; n monomials take n-1 XOR2 gates.
std::pair<uint64_t, uint64_t> cost_anf(const AnfPoly& poly);

/// Heuristic two-level cover of the on-set: covers every 1-vertex, no
/// 0-vertex, may absorb don't-cares.  Every cube is prime with respect to
/// the off-set.  Deterministic; not guaranteed minimum.
Cover minimize_sop(const BoolTable& t);

uint64_t cover_literals(const Cover& cover);

/// Berkeley PLA text.  The table overload writes one row per specified
/// vertex (type fr: don't-cares are simply absent); the cover overload
/// writes one 1-row per cube.  Input columns are x_0 leftmost.
std::string export_pla(const BoolTable& t);
std::string export_pla(const Cover& cover, uint32_t num_inputs);

/// Parse PLA text written by export_pla (accepts '-' in input patterns).
/// Unlisted vertices become don't-cares.
BoolTable parse_pla(const std::string& text);

}  // namespace binmach
