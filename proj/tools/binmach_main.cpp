// binmach: synthesize, simulate, and benchmark parallel binary machines.
//
// Exit codes: 0 success, 1 verification mismatch or internal failure,
// 2 input file parse error, 3 usage or parameter error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "binmach/baselines.hpp"
#include "binmach/compare.hpp"
#include "binmach/io.hpp"
#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"
#include "binmach/synth.hpp"

namespace {

using namespace binmach;

DcPolicy policy_from_name(const std::string& name) {
  if (name == "zero") return DcPolicy::zero;
  if (name == "one") return DcPolicy::one;
  if (name == "minimize") return DcPolicy::minimize;
  throw std::invalid_argument("unknown don't-care policy '" + name + "'");
}

PermutationPolicy perm_from_name(const std::string& name) {
  if (name == "identity") return PermutationPolicy::identity();
  if (name.rfind("shuffle:", 0) == 0) {
    const std::string seed = name.substr(8);
    if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("--perm shuffle needs an unsigned seed, got '" + seed + "'");
    return PermutationPolicy::shuffle(std::stoull(seed));
  }
  throw std::invalid_argument("--perm takes 'identity' or 'shuffle:<seed>', got '" + name +
                              "'");
}

void emit_sequence(const DigitSequence& seq, const std::string& out_path) {
  if (out_path.empty())
    std::cout << format_sequence_text(seq);
  else
    write_sequence_file(out_path, seq);
}

int run_gen(const std::string& kind, uint64_t length, uint64_t seed, uint64_t prime,
            uint32_t order, const std::string& out_path) {
  if (kind == "random") {
    emit_sequence(gen_random(length, seed), out_path);
  } else if (kind == "legendre") {
    emit_sequence(gen_legendre(prime), out_path);
  } else {  // golay; --out is enforced by the CLI definition
    const auto [a, b] = gen_golay_pair(order);
    write_sequence_file(out_path + ".a", a);
    write_sequence_file(out_path + ".b", b);
  }
  return 0;
}

int run_synth(const std::string& in_path, const std::string& out_path, uint32_t p,
              const std::string& dc_name, const std::string& perm_name) {
  const DigitSequence input = read_sequence_file(in_path);
  if (!input.is_binary())
    throw std::invalid_argument("synth expects a binary input sequence");
  const DcPolicy policy = policy_from_name(dc_name);
  const PermutationPolicy perm = perm_from_name(perm_name);

  const EncodedSequence enc = encode_m_ary(input, p);
  const PeriodReport period = period_analysis(enc.seq);
  const uint64_t k_digits = enc.seq.size();
  if (period.pre_period > 0)
    std::cerr << "warning: input is eventually periodic (pre-period " << period.pre_period
              << ", period " << period.period
              << "); the machine repeats the whole block of " << k_digits << " digits\n";
  else if (period.period < k_digits && k_digits % period.period == 0)
    std::cerr << "warning: input repeats every " << period.period
              << " digits; a machine over one period would be smaller\n";

  const MAryMachine mm = synthesize_machine(enc.seq, perm);
  const BinaryMachine bm = binarize(mm);
  if (bm.n_bits != binary_stage_bound(input, p))
    throw std::logic_error("stage count disagrees with the digit-count bound");

  // Regeneration check: one full cycle must reproduce the input (plus pad).
  const DigitSequence bits = run(bm, k_digits);
  for (size_t i = 0; i < input.size(); ++i) {
    if (bits.digits[i] != input.digits[i]) {
      std::cerr << "verification mismatch at bit " << i << ": machine emits "
                << bits.digits[i] << ", input holds " << input.digits[i] << "\n";
      return 1;
    }
  }

  const MachineCost cost = machine_cost(bm, policy);
  const DigitCounts counts = digit_counts(enc.seq);
  std::cout << "k=" << input.size() << "\n"
            << "p=" << p << "\n"
            << "m=" << enc.seq.m << "\n"
            << "digits=" << k_digits << "\n"
            << "pad=" << enc.pad.size() << "\n"
            << "n_max=" << counts.n_max << "\n"
            << "dc=" << dc_policy_name(policy) << "\n"
            << "stages=" << bm.n_bits << "\n"
            << "and2=" << cost.report.and2_count << "\n"
            << "xor2=" << cost.report.xor2_count << "\n"
            << "registers=" << cost.report.register_stages << "\n"
            << "total_units=" << cost.report.total_units << "\n"
            << "sop_literals=" << cost.sop_literals << "\n";
  if (!out_path.empty()) {
    write_machine_file(out_path, mm, p, policy);
    std::cout << "out=" << out_path << "\n";
  }
  return 0;
}

int run_sim(const std::string& in_path, std::optional<uint64_t> cycles_opt,
            const std::string& expect_path) {
  const MachineFile mf = read_machine_file(in_path);
  const BinaryMachine bm = complete(binarize(mf.machine), mf.policy);

  std::optional<DigitSequence> expected;
  if (!expect_path.empty()) {
    expected = read_sequence_file(expect_path);
    if (!expected->is_binary())
      throw std::invalid_argument("--expect needs a binary sequence file");
  }

  const uint64_t cycles = cycles_opt  ? *cycles_opt
                          : expected  ? (expected->size() + bm.p - 1) / bm.p
                                      : mf.machine.transitions().size();
  const DigitSequence emitted = run(bm, cycles);

  if (expected) {
    if (emitted.size() < expected->size()) {
      std::cerr << "verification mismatch: machine emitted " << emitted.size()
                << " bits, expected at least " << expected->size() << "\n";
      return 1;
    }
    for (size_t i = 0; i < expected->size(); ++i) {
      if (emitted.digits[i] != expected->digits[i]) {
        std::cerr << "verification mismatch at bit " << i << ": machine emits "
                  << emitted.digits[i] << ", expected " << expected->digits[i] << "\n";
        return 1;
      }
    }
  }
  std::cout << format_sequence_text(emitted);
  return 0;
}

int run_compare(const std::vector<std::string>& inputs, const std::string& parallel,
                const std::string& dc_name, const std::string& format) {
  std::optional<uint32_t> p;
  if (parallel != "fixpoint") {
    try {
      const unsigned long v = std::stoul(parallel);
      if (v < 1 || v > 32) throw std::out_of_range("p");
      p = uint32_t(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("--parallel takes an integer in [1, 32] or 'fixpoint'");
    }
  }
  const DcPolicy policy = policy_from_name(dc_name);

  std::vector<CompareRow> rows;
  rows.reserve(inputs.size());
  for (const std::string& path : inputs) {
    const DigitSequence a2 = read_sequence_file(path);
    rows.push_back(
        compare_sequence(std::filesystem::path(path).stem().string(), a2, p, policy));
  }

  if (format == "csv") {
    std::cout << compare_csv_header();
    for (const CompareRow& row : rows) std::cout << compare_csv_row(row);
  } else {
    std::cout << compare_table(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel binary machine synthesis from finite sequences"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a test sequence");
  gen->require_subcommand(1);
  std::string gen_out;
  uint64_t gen_length = 64, gen_seed = 1, gen_prime = 7;
  uint32_t gen_order = 2;
  auto* gen_random_cmd = gen->add_subcommand("random", "Seeded pseudo-random bits");
  gen_random_cmd->add_option("--length", gen_length, "Number of bits")
      ->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--seed", gen_seed, "PRNG seed");
  gen_random_cmd->add_option("--out", gen_out, "Output sequence file (default: stdout)");
  auto* gen_legendre_cmd = gen->add_subcommand("legendre", "Legendre sequence");
  gen_legendre_cmd->add_option("--prime", gen_prime, "Odd prime length")->required();
  gen_legendre_cmd->add_option("--out", gen_out, "Output sequence file (default: stdout)");
  auto* gen_golay_cmd = gen->add_subcommand("golay", "Complementary pair of order t");
  gen_golay_cmd->add_option("--order", gen_order, "Doubling order t (lengths 2^t)")
      ->check(CLI::Range(0u, 24u));
  gen_golay_cmd->add_option("--out", gen_out, "Output base path (.a/.b appended)")
      ->required();

  // synth
  auto* synth = app.add_subcommand("synth", "Synthesize a machine from a binary sequence");
  std::string synth_in, synth_out, synth_dc = "zero", synth_perm = "identity";
  uint32_t synth_p = 1;
  synth->add_option("--input", synth_in, "Binary sequence file")->required();
  synth->add_option("--out", synth_out, "Machine file to write");
  synth->add_option("--parallel", synth_p, "Bits emitted per clock")
      ->check(CLI::Range(1u, 32u));
  synth->add_option("--dc-policy", synth_dc, "Don't-care policy: zero, one, minimize")
      ->check(CLI::IsMember({"zero", "one", "minimize"}));
  synth->add_option("--perm", synth_perm,
                    "State assignment order: 'identity' or 'shuffle:<seed>'");

  // sim
  auto* sim = app.add_subcommand("sim", "Run a machine file and emit its bit stream");
  std::string sim_in, sim_expect;
  std::optional<uint64_t> sim_cycles;
  sim->add_option("machine", sim_in, "Machine file")->required();
  sim->add_option("--cycles", sim_cycles, "Clock cycles (default: one full cycle)")
      ->check(CLI::PositiveNumber);
  sim->add_option("--expect", sim_expect, "Sequence file the output must reproduce");

  // compare
  auto* compare = app.add_subcommand("compare", "Benchmark against LFSR constructions");
  std::vector<std::string> compare_in;
  std::string compare_parallel = "fixpoint", compare_dc = "zero", compare_format = "table";
  compare->add_option("--input", compare_in, "Binary sequence file (repeatable)")
      ->required();
  compare->add_option("--parallel", compare_parallel,
                      "Bits per clock: an integer or 'fixpoint'");
  compare->add_option("--dc-policy", compare_dc, "Don't-care policy for the machine cost")
      ->check(CLI::IsMember({"zero", "one", "minimize"}));
  compare->add_option("--format", compare_format, "Output format")
      ->check(CLI::IsMember({"table", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }

  try {
    if (gen->parsed()) {
      const std::string kind = gen_random_cmd->parsed()     ? "random"
                               : gen_legendre_cmd->parsed() ? "legendre"
                                                            : "golay";
      return run_gen(kind, gen_length, gen_seed, gen_prime, gen_order, gen_out);
    }
    if (synth->parsed())
      return run_synth(synth_in, synth_out, synth_p, synth_dc, synth_perm);
    if (sim->parsed()) return run_sim(sim_in, sim_cycles, sim_expect);
    return run_compare(compare_in, compare_parallel, compare_dc, compare_format);
  } catch (const binmach::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
