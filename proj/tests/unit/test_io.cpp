#include <random>

#include "binmach/io.hpp"
#include "doctest.h"
#include "test_data.hpp"

using namespace binmach;

TEST_CASE("sequence text parsing") {
  SUBCASE("binary digits with comments and whitespace") {
    const DigitSequence seq = parse_sequence_text("# header\n01 10\n\n11 # tail\n", "t");
    CHECK(seq.m == 2);
    CHECK(seq.digits == std::vector<uint64_t>{0, 1, 1, 0, 1, 1});
  }
  SUBCASE("radix header and letter digits") {
    const DigitSequence seq = parse_sequence_text("m=32\n0 9 a v\n", "t");
    CHECK(seq.m == 32);
    CHECK(seq.digits == std::vector<uint64_t>{0, 9, 10, 31});
  }
  SUBCASE("errors carry the source and line") {
    CHECK_THROWS_WITH_AS(parse_sequence_text("0\nx\n", "f.seq"),
                         "f.seq:2: invalid digit character 'x'", ParseError);
    CHECK_THROWS_AS(parse_sequence_text("2\n", "t"), ParseError);        // digit >= m
    CHECK_THROWS_AS(parse_sequence_text("m=1\n0\n", "t"), ParseError);   // radix too small
    CHECK_THROWS_AS(parse_sequence_text("m=33\n0\n", "t"), ParseError);  // radix too large
    CHECK_THROWS_AS(parse_sequence_text("# only\n", "t"), ParseError);   // no digits
    CHECK_THROWS_AS(parse_sequence_text("0\nm=4\n", "t"), ParseError);   // header after digits
  }
}

TEST_CASE("sequence text formatting") {
  SUBCASE("binary output omits the radix header") {
    CHECK(format_sequence_text(DigitSequence(2, {0, 1, 1})) == "011\n");
  }
  SUBCASE("non-binary output keeps it") {
    CHECK(format_sequence_text(DigitSequence(8, testdata::kA8)) == "m=8\n1562730\n");
  }
  SUBCASE("long outputs wrap") {
    const DigitSequence seq(2, std::vector<uint64_t>(130, 1));
    const std::string text = format_sequence_text(seq);
    CHECK(text.find('\n') == 64);
    CHECK(parse_sequence_text(text, "t") == seq);
  }
  SUBCASE("round-trip across radixes") {
    std::mt19937_64 eng(97);
    for (int trial = 0; trial < 30; ++trial) {
      const uint64_t m = 2 + eng() % 31;
      std::vector<uint64_t> digits(1 + eng() % 200);
      for (auto& d : digits) d = eng() % m;
      const DigitSequence seq(m, digits);
      CHECK(parse_sequence_text(format_sequence_text(seq), "t") == seq);
    }
  }
}

TEST_CASE("machine text format") {
  const MAryMachine mm(4, 2, testdata::kQuaternaryTransitions, 0);

  SUBCASE("golden output") {
    const std::string text = format_machine_text(mm, 2, DcPolicy::zero);
    CHECK(text ==
          "BINMACH 1\n"
          "m 4\n"
          "n 2\n"
          "p 2\n"
          "init 0\n"
          "dc zero\n"
          "T 0 3\n"
          "T 1 7\n"
          "T 2 11\n"
          "T 3 1\n"
          "T 4 2\n"
          "T 6 15\n"
          "T 7 4\n"
          "T 8 0\n"
          "T 11 6\n"
          "T 15 8\n");
  }
  SUBCASE("round-trip preserves behavior") {
    for (DcPolicy policy : {DcPolicy::zero, DcPolicy::one, DcPolicy::minimize}) {
      const MachineFile mf =
          parse_machine_text(format_machine_text(mm, 2, policy), "t");
      CHECK(mf.p == 2);
      CHECK(mf.policy == policy);
      CHECK(mf.machine.m() == mm.m());
      CHECK(mf.machine.n() == mm.n());
      CHECK(mf.machine.initial() == mm.initial());
      CHECK(mf.machine.transitions() == mm.transitions());
      CHECK(run(mf.machine, 1000).digits == run(mm, 1000).digits);
    }
  }
  SUBCASE("comments and blank lines are ignored") {
    const MachineFile mf = parse_machine_text(
        "# generated\nBINMACH 1\n\nm 2\nn 1 # one stage\np 1\ninit 0\ndc one\nT 0 1\nT 1 0\n",
        "t");
    CHECK(mf.machine.m() == 2);
    CHECK(mf.policy == DcPolicy::one);
  }
  SUBCASE("malformed files are rejected with locations") {
    CHECK_THROWS_AS(parse_machine_text("", "t"), ParseError);
    CHECK_THROWS_AS(parse_machine_text("BINMACH 2\n", "t"), ParseError);
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\np 1\ninit 0\ndc zero\n", "t"),
        ParseError);  // no transitions
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\np 1\ninit 0\ndc maybe\nT 0 0\n", "t"),
        ParseError);
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\np 1\ninit 0\ndc zero\nT 0 0\nT 0 1\n",
                           "t"),
        ParseError);  // duplicate transition
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\np 1\ninit 0\ndc zero\nT 0 2\n", "t"),
        ParseError);  // next state outside m^n
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\np 1\ninit 1\ndc zero\nT 0 0\n", "t"),
        ParseError);  // initial state unspecified
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\ninit 0\ndc zero\nT 0 0\n", "t"),
        ParseError);  // missing p
    CHECK_THROWS_AS(
        parse_machine_text("BINMACH 1\nm 2\nn 1\np 1\ninit 0\ndc zero\nT 0 0 9\n", "t"),
        ParseError);  // trailing token
  }
}

TEST_CASE("lfsr text format") {
  LfsrSpec l;
  l.coeffs = {0, 0, 1, 1};
  l.fill = {0, 0, 0, 1};

  SUBCASE("golden output packs coefficients as hex") {
    CHECK(format_lfsr_text(l) == "LFSR 4\npoly c\nfill 8\n");
    CHECK(format_lfsr_text(LfsrSpec{}) == "LFSR 0\npoly 0\nfill 0\n");
  }
  SUBCASE("round-trip") {
    const LfsrSpec back = parse_lfsr_text(format_lfsr_text(l), "t");
    CHECK(back.coeffs == l.coeffs);
    CHECK(back.fill == l.fill);
    CHECK(parse_lfsr_text(format_lfsr_text(LfsrSpec{}), "t").length() == 0);
  }
  SUBCASE("registers beyond one hex word round-trip") {
    std::mt19937_64 eng(101);
    LfsrSpec big;
    big.coeffs.resize(131);
    big.fill.resize(131);
    for (auto& c : big.coeffs) c = uint8_t(eng() & 1);
    for (auto& f : big.fill) f = uint8_t(eng() & 1);
    const LfsrSpec back = parse_lfsr_text(format_lfsr_text(big), "t");
    CHECK(back.coeffs == big.coeffs);
    CHECK(back.fill == big.fill);
  }
  SUBCASE("malformed files are rejected") {
    CHECK_THROWS_AS(parse_lfsr_text("", "t"), ParseError);
    CHECK_THROWS_AS(parse_lfsr_text("LFSR 4\npoly c\n", "t"), ParseError);  // no fill
    CHECK_THROWS_AS(parse_lfsr_text("poly c\nLFSR 4\nfill 8\n", "t"),
                    ParseError);  // poly before length
    CHECK_THROWS_AS(parse_lfsr_text("LFSR 4\npoly zz\nfill 8\n", "t"), ParseError);
    CHECK_THROWS_AS(parse_lfsr_text("LFSR 2\npoly c\nfill 0\n", "t"),
                    ParseError);  // tap beyond the register
    CHECK_THROWS_AS(parse_lfsr_text("LFSR 4\npoly c c\nfill 8\n", "t"), ParseError);
  }
}

TEST_CASE("file helpers surface missing paths as parse errors") {
  CHECK_THROWS_AS(read_sequence_file("/nonexistent/q.seq"), ParseError);
  CHECK_THROWS_AS(read_machine_file("/nonexistent/q.bm"), ParseError);
  CHECK_THROWS_AS(read_lfsr_file("/nonexistent/q.lfsr"), ParseError);
  CHECK(dc_policy_name(DcPolicy::minimize) == "minimize");
}
