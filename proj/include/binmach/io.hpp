#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "binmach/baselines.hpp"
#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

/// Error in an input file; exit code 2 territory for the CLI.
struct ParseError : std::runtime_error {
  ParseError(const std::string& source, size_t line, const std::string& what_arg)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what_arg),
        line(line) {}
  size_t line;
};

/// Sequence text: digit characters '0'-'9' then 'a'-'v' (m up to 32), any
/// whitespace ignored, '#' starts a comment, optional leading "m=<int>"
/// header (default m = 2).
DigitSequence parse_sequence_text(const std::string& text, const std::string& source);
std::string format_sequence_text(const DigitSequence& seq);
DigitSequence read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const DigitSequence& seq);

/// Machine file: literal first line "BINMACH 1", then "m", "n", "p",
/// "init" (state integer, radix-m digits with stage 0 least significant),
/// "dc zero|one|minimize", then one "T <cur> <next>" line per specified
/// transition in ascending cur order.  Absent states are don't-cares.
/// '#' lines are comments.
struct MachineFile {
  MAryMachine machine;
  uint32_t p;
  DcPolicy policy;
};

MachineFile parse_machine_text(const std::string& text, const std::string& source);
std::string format_machine_text(const MAryMachine& mm, uint32_t p, DcPolicy policy);
MachineFile read_machine_file(const std::string& path);
void write_machine_file(const std::string& path, const MAryMachine& mm, uint32_t p,
                        DcPolicy policy);

/// LFSR text: "LFSR <L>", "poly <hex of c_L..c_1>", "fill <hex of
/// s_{L-1}..s_0>".  Hex is lowercase without prefix; L == 0 writes "0".
LfsrSpec parse_lfsr_text(const std::string& text, const std::string& source);
std::string format_lfsr_text(const LfsrSpec& l);
LfsrSpec read_lfsr_file(const std::string& path);
void write_lfsr_file(const std::string& path, const LfsrSpec& l);

std::string dc_policy_name(DcPolicy policy);

}  // namespace binmach
