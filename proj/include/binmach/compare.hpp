#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

/// One benchmark line: the synthesized binary machine against the classical
/// LFSR constructions at the same degree of parallelization.
struct CompareRow {
  std::string id;
  uint64_t k = 0;
  uint32_t p = 1;
  uint32_t bm_stages = 0;
  uint64_t bm_cost = 0;
  uint64_t lfsr_bm_length = 0;
  std::optional<uint64_t> lfsr_parallel_cost;  // absent when p > L
  std::optional<uint64_t> decimation_cost;     // absent when p >= k
  uint64_t decimation_total_bits = 0;

  /// baseline cost / machine cost; infinity when the baseline is undefined.
  double ratio_parallel() const;
  double ratio_decimation() const;
};

/// Smallest p (swept upward from 1) with binary_stage_bound(a2, p) == p,
/// i.e. where every digit of the 2^p-ary encoding is unique.
uint32_t parallelization_fixpoint(const DigitSequence& a2, uint32_t p_cap = 32);

/// Build one row.  p == nullopt sweeps to the fixpoint.
CompareRow compare_sequence(const std::string& id, const DigitSequence& a2,
                            std::optional<uint32_t> p,
                            DcPolicy policy = DcPolicy::zero, UnitCosts costs = {});

std::string compare_csv_header();
std::string compare_csv_row(const CompareRow& row);
std::string compare_table(const std::vector<CompareRow>& rows);

}  // namespace binmach
