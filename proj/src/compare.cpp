#include "binmach/compare.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "binmach/baselines.hpp"
#include "binmach/synth.hpp"

namespace binmach {

namespace {

double ratio_of(const std::optional<uint64_t>& baseline, uint64_t machine) {
  if (!baseline) return std::numeric_limits<double>::infinity();
  if (machine == 0) return std::numeric_limits<double>::infinity();
  return double(*baseline) / double(machine);
}

std::string opt_token(const std::optional<uint64_t>& v) {
  return v ? std::to_string(*v) : "na";
}

std::string ratio_token(double r) {
  if (std::isinf(r)) return "inf";
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << r;
  return out.str();
}

}  // namespace

double CompareRow::ratio_parallel() const { return ratio_of(lfsr_parallel_cost, bm_cost); }

double CompareRow::ratio_decimation() const { return ratio_of(decimation_cost, bm_cost); }

uint32_t parallelization_fixpoint(const DigitSequence& a2, uint32_t p_cap) {
  if (a2.m != 2)
    throw std::invalid_argument("parallelization fixpoint expects a binary sequence");
  for (uint32_t p = 1; p <= p_cap; ++p)
    if (binary_stage_bound(a2, p) == p) return p;
  throw std::invalid_argument("no parallelization fixpoint up to the cap of " +
                              std::to_string(p_cap));
}

CompareRow compare_sequence(const std::string& id, const DigitSequence& a2,
                            std::optional<uint32_t> p, DcPolicy policy, UnitCosts costs) {
  if (a2.m != 2) throw std::invalid_argument("compare expects a binary sequence");
  CompareRow row;
  row.id = id;
  row.k = a2.digits.size();
  row.p = p ? *p : parallelization_fixpoint(a2);

  const EncodedSequence enc = encode_m_ary(a2, row.p);
  const MAryMachine mm = synthesize_machine(enc.seq);
  const BinaryMachine bm = binarize(mm);
  row.bm_stages = bm.n_bits;
  row.bm_cost = machine_cost(bm, policy, costs).report.total_units;

  const LfsrSpec lfsr = berlekamp_massey(a2);
  row.lfsr_bm_length = lfsr.length();
  if (row.p >= 1 && row.p <= lfsr.length())
    row.lfsr_parallel_cost = lfsr_cost(lfsr_parallelize(lfsr, row.p), costs).total_units;
  if (row.p < a2.digits.size()) {
    const DecimationBank bank = decimate_synthesis(a2, row.p);
    row.decimation_cost = lfsr_cost(bank, costs).total_units;
    row.decimation_total_bits = bank.total_bits;
  }
  return row;
}

std::string compare_csv_header() {
  return "id,k,p,bm_stages,bm_cost,lfsr_bm_length,lfsr_parallel_cost,ratio_parallel,"
         "decimation_cost,decimation_total_bits,ratio_decimation\n";
}

std::string compare_csv_row(const CompareRow& row) {
  std::ostringstream out;
  out << row.id << ',' << row.k << ',' << row.p << ',' << row.bm_stages << ','
      << row.bm_cost << ',' << row.lfsr_bm_length << ','
      << opt_token(row.lfsr_parallel_cost) << ',' << ratio_token(row.ratio_parallel()) << ','
      << opt_token(row.decimation_cost) << ',' << row.decimation_total_bits << ','
      << ratio_token(row.ratio_decimation()) << '\n';
  return out.str();
}

std::string compare_table(const std::vector<CompareRow>& rows) {
  static const char* headers[] = {"id",       "k",          "p",         "bm_stages",
                                  "bm_cost",  "lfsr_L",     "par_cost",  "par_ratio",
                                  "dec_cost", "dec_bits",   "dec_ratio"};
  constexpr size_t ncols = sizeof(headers) / sizeof(headers[0]);

  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const CompareRow& r : rows)
    cells.push_back({r.id, std::to_string(r.k), std::to_string(r.p),
                     std::to_string(r.bm_stages), std::to_string(r.bm_cost),
                     std::to_string(r.lfsr_bm_length), opt_token(r.lfsr_parallel_cost),
                     ratio_token(r.ratio_parallel()), opt_token(r.decimation_cost),
                     std::to_string(r.decimation_total_bits),
                     ratio_token(r.ratio_decimation())});

  size_t width[ncols];
  for (size_t c = 0; c < ncols; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  for (size_t c = 0; c < ncols; ++c)
    out << (c ? "  " : "") << std::setw(int(width[c])) << std::left << headers[c];
  out << '\n';
  for (const auto& row : cells) {
    for (size_t c = 0; c < ncols; ++c)
      out << (c ? "  " : "") << std::setw(int(width[c])) << std::left << row[c];
    out << '\n';
  }
  return out.str();
}

}  // namespace binmach
