#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "binmach/baselines.hpp"
#include "binmach/compare.hpp"
#include "binmach/synth.hpp"
#include "doctest.h"
#include "test_data.hpp"

using namespace binmach;

TEST_CASE("parallelization_fixpoint finds the first width matching its stage count") {
  const DigitSequence a2(2, testdata::kA2);
  CHECK(parallelization_fixpoint(a2) == 3);  // bounds run 5, 4, 3 for p = 1, 2, 3

  // At the fixed point all encoded digits are distinct.
  std::mt19937_64 eng(103);
  for (int trial = 0; trial < 12; ++trial) {
    const DigitSequence seq = gen_random(32 + eng() % 400, eng());
    const uint32_t p = parallelization_fixpoint(seq);
    CHECK(binary_stage_bound(seq, p) == p);
    const EncodedSequence enc = encode_m_ary(seq, p);
    std::set<uint64_t> uniq(enc.seq.digits.begin(), enc.seq.digits.end());
    CHECK(uniq.size() == enc.seq.size());
    for (uint32_t q = 1; q < p; ++q) CHECK(binary_stage_bound(seq, q) != q);
  }

  CHECK_THROWS_AS(parallelization_fixpoint(DigitSequence(4, {0})),
                  std::invalid_argument);
}

TEST_CASE("compare_sequence assembles machine and baseline numbers") {
  const DigitSequence a2(2, testdata::kA2);
  const CompareRow row = compare_sequence("ref", a2, 3);
  CHECK(row.id == "ref");
  CHECK(row.k == 20);
  CHECK(row.p == 3);
  CHECK(row.bm_stages == 3);
  CHECK(row.bm_cost == machine_cost(binarize(synthesize_machine(encode_m_ary(a2, 3).seq)),
                                    DcPolicy::zero)
                           .report.total_units);
  CHECK(row.lfsr_bm_length == berlekamp_massey(a2).length());
  REQUIRE(row.lfsr_parallel_cost.has_value());
  CHECK(row.ratio_parallel() ==
        doctest::Approx(double(*row.lfsr_parallel_cost) / double(row.bm_cost)));
  REQUIRE(row.decimation_cost.has_value());
  CHECK(row.decimation_total_bits ==
        decimate_synthesis(a2, 3).total_bits);

  // Sweeping defaults to the fixed point.
  CHECK(compare_sequence("ref", a2, std::nullopt).p == 3);
}

TEST_CASE("compare_sequence marks inapplicable baselines") {
  // All-zero input: the shortest register is empty, so no parallelization
  // exists at any p and the ratio degenerates to infinity.
  const DigitSequence zeros(2, {0, 0, 0, 0});
  const CompareRow row = compare_sequence("zeros", zeros, 1);
  CHECK(row.lfsr_bm_length == 0);
  CHECK(!row.lfsr_parallel_cost.has_value());
  CHECK(std::isinf(row.ratio_parallel()));
  REQUIRE(row.decimation_cost.has_value());
  CHECK(*row.decimation_cost == 0);

  // p equal to the length: no decimation bank either.
  const CompareRow wide = compare_sequence("w", DigitSequence(2, {0, 1}), 2);
  CHECK(!wide.decimation_cost.has_value());
  CHECK(std::isinf(wide.ratio_decimation()));
}

TEST_CASE("csv output is one fixed-order row per sequence") {
  CHECK(compare_csv_header() ==
        "id,k,p,bm_stages,bm_cost,lfsr_bm_length,lfsr_parallel_cost,ratio_parallel,"
        "decimation_cost,decimation_total_bits,ratio_decimation\n");

  const CompareRow row = compare_sequence("ref", DigitSequence(2, testdata::kA2), 3);
  const std::string line = compare_csv_row(row);
  CHECK(line.substr(0, 9) == "ref,20,3,");
  CHECK(std::count(line.begin(), line.end(), ',') == 10);

  const CompareRow zeros = compare_sequence("z", DigitSequence(2, {0, 0, 0, 0}), 1);
  const std::string zline = compare_csv_row(zeros);
  CHECK(zline.find(",na,inf,") != std::string::npos);
}

TEST_CASE("table output aligns headers and rows") {
  const std::vector<CompareRow> rows = {
      compare_sequence("ref", DigitSequence(2, testdata::kA2), 3)};
  const std::string table = compare_table(rows);
  std::istringstream is(table);
  std::string header, body;
  REQUIRE(std::getline(is, header));
  REQUIRE(std::getline(is, body));
  CHECK(header.find("bm_cost") != std::string::npos);
  CHECK(header.find("dec_ratio") != std::string::npos);
  CHECK(body.find("ref") == 0);
}
