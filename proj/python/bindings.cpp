// Python bindings for the binmach core: sequence handling, machine
// synthesis, classical LFSR baselines, and the comparison harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binmach/baselines.hpp"
#include "binmach/compare.hpp"
#include "binmach/io.hpp"
#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"
#include "binmach/synth.hpp"

namespace py = pybind11;
using namespace binmach;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel binary machine synthesis from finite sequences";

  py::class_<DigitSequence>(m, "DigitSequence")
      .def(py::init<uint64_t, std::vector<uint64_t>>(), py::arg("m"), py::arg("digits"))
      .def_static("from_bits", &DigitSequence::from_bits, py::arg("bits"))
      .def("to_bits", &DigitSequence::to_bits)
      .def_readonly("m", &DigitSequence::m)
      .def_readonly("digits", &DigitSequence::digits)
      .def("__len__", &DigitSequence::size)
      .def("__eq__", [](const DigitSequence& a, const DigitSequence& b) { return a == b; });

  py::class_<DigitCounts>(m, "DigitCounts")
      .def_readonly("m", &DigitCounts::m)
      .def_readonly("counts", &DigitCounts::counts)
      .def_readonly("n_max", &DigitCounts::n_max)
      .def_readonly("total", &DigitCounts::total)
      .def("count", &DigitCounts::count, py::arg("digit"));

  py::class_<PeriodReport>(m, "PeriodReport")
      .def_readonly("pre_period", &PeriodReport::pre_period)
      .def_readonly("period", &PeriodReport::period)
      .def_readonly("purely_periodic", &PeriodReport::purely_periodic);

  py::class_<EncodedSequence>(m, "EncodedSequence")
      .def_readonly("seq", &EncodedSequence::seq)
      .def_readonly("pad", &EncodedSequence::pad)
      .def_readonly("p", &EncodedSequence::p);

  m.def("encode_m_ary", &encode_m_ary, py::arg("a2"), py::arg("p"));
  m.def("decode_m_ary", &decode_m_ary, py::arg("am"), py::arg("p"));
  m.def("digit_counts", &digit_counts, py::arg("a"));
  m.def("period_analysis", &period_analysis, py::arg("a"));
  m.def("gen_random", &gen_random, py::arg("length"), py::arg("seed"));
  m.def("gen_legendre", &gen_legendre, py::arg("prime"));
  m.def("gen_golay_pair", &gen_golay_pair, py::arg("order"));

  py::class_<PermutationPolicy> perm(m, "PermutationPolicy");
  perm.def_static("identity", &PermutationPolicy::identity)
      .def_static("shuffle", &PermutationPolicy::shuffle, py::arg("seed"));

  py::enum_<DcPolicy>(m, "DcPolicy")
      .value("zero", DcPolicy::zero)
      .value("one", DcPolicy::one)
      .value("minimize", DcPolicy::minimize);

  py::class_<MAryMachine>(m, "MAryMachine")
      .def(py::init<uint64_t, uint64_t, std::map<uint64_t, uint64_t>, uint64_t>(),
           py::arg("m"), py::arg("n"), py::arg("transitions"), py::arg("initial"))
      .def_property_readonly("m", &MAryMachine::m)
      .def_property_readonly("n", &MAryMachine::n)
      .def_property_readonly("initial", &MAryMachine::initial)
      .def_property_readonly("transitions", &MAryMachine::transitions)
      .def("specified", &MAryMachine::specified, py::arg("state"))
      .def("step", &MAryMachine::step, py::arg("state"))
      .def("output", &MAryMachine::output, py::arg("state"))
      .def("digit", &MAryMachine::digit, py::arg("state"), py::arg("stage"))
      .def("i_set", &MAryMachine::i_set, py::arg("stage"), py::arg("value"));

  py::class_<BoolTable>(m, "BoolTable")
      .def_readonly("num_inputs", &BoolTable::num_inputs)
      .def_readonly("values", &BoolTable::values)
      .def("is_complete", &BoolTable::is_complete);

  py::class_<BinaryMachine>(m, "BinaryMachine")
      .def_readonly("n_bits", &BinaryMachine::n_bits)
      .def_readonly("p", &BinaryMachine::p)
      .def_readonly("tables", &BinaryMachine::tables)
      .def_readonly("dc_policy", &BinaryMachine::dc_policy)
      .def_readonly("initial", &BinaryMachine::initial)
      .def("is_complete", &BinaryMachine::is_complete)
      .def("step", &BinaryMachine::step, py::arg("state"));

  py::class_<StateAssignment>(m, "StateAssignment")
      .def_readonly("m", &StateAssignment::m)
      .def_readonly("states", &StateAssignment::states)
      .def_readonly("pools_used", &StateAssignment::pools_used);

  m.def("assign_states", &assign_states, py::arg("a"),
        py::arg("policy") = PermutationPolicy::identity());
  m.def("binary_stage_bound", &binary_stage_bound, py::arg("a2"), py::arg("p"));
  m.def("synthesize_machine", &synthesize_machine, py::arg("a"),
        py::arg("policy") = PermutationPolicy::identity());
  m.def("binarize", &binarize, py::arg("machine"));
  m.def("complete", &complete, py::arg("machine"), py::arg("policy"));
  m.def("run_m_ary", py::overload_cast<const MAryMachine&, uint64_t>(&run),
        py::arg("machine"), py::arg("cycles"));
  m.def("run_binary", py::overload_cast<const BinaryMachine&, uint64_t>(&run),
        py::arg("machine"), py::arg("cycles"));
  m.def("run", py::overload_cast<const MAryMachine&, uint64_t>(&run), py::arg("machine"),
        py::arg("cycles"));
  m.def("run", py::overload_cast<const BinaryMachine&, uint64_t>(&run),
        py::arg("machine"), py::arg("cycles"));

  py::class_<UnitCosts>(m, "UnitCosts")
      .def(py::init<>())
      .def_readwrite("and2", &UnitCosts::and2)
      .def_readwrite("xor2", &UnitCosts::xor2)
      .def_readwrite("reg", &UnitCosts::reg);

  py::class_<CostReport>(m, "CostReport")
      .def_readonly("and2_count", &CostReport::and2_count)
      .def_readonly("xor2_count", &CostReport::xor2_count)
      .def_readonly("register_stages", &CostReport::register_stages)
      .def_readonly("total_units", &CostReport::total_units);

  py::class_<MachineCost>(m, "MachineCost")
      .def_readonly("report", &MachineCost::report)
      .def_readonly("sop_literals", &MachineCost::sop_literals);

  m.def("machine_cost", &machine_cost, py::arg("machine"), py::arg("policy"),
        py::arg("costs") = UnitCosts{});

  py::class_<LfsrSpec>(m, "LfsrSpec")
      .def(py::init([](std::vector<uint8_t> coeffs, std::vector<uint8_t> fill) {
             return LfsrSpec{std::move(coeffs), std::move(fill)};
           }),
           py::arg("coeffs"), py::arg("fill"))
      .def_readonly("coeffs", &LfsrSpec::coeffs)
      .def_readonly("fill", &LfsrSpec::fill)
      .def("length", &LfsrSpec::length)
      .def("tap_count", &LfsrSpec::tap_count);

  py::class_<ParallelLinearMap>(m, "ParallelLinearMap")
      .def_readonly("length", &ParallelLinearMap::length)
      .def_readonly("p", &ParallelLinearMap::p)
      .def_readonly("output_bits", &ParallelLinearMap::output_bits);

  py::class_<DecimationBank>(m, "DecimationBank")
      .def_readonly("p", &DecimationBank::p)
      .def_readonly("phases", &DecimationBank::phases)
      .def_readonly("total_bits", &DecimationBank::total_bits);

  m.def("lfsr_generate", &lfsr_generate, py::arg("lfsr"), py::arg("nbits"));
  m.def("berlekamp_massey", &berlekamp_massey, py::arg("a2"));
  m.def("lfsr_parallelize", &lfsr_parallelize, py::arg("lfsr"), py::arg("p"));
  m.def("parallel_generate", &parallel_generate, py::arg("map"), py::arg("fill"),
        py::arg("nbits"));
  m.def("decimate_synthesis", &decimate_synthesis, py::arg("a2"), py::arg("p"));
  m.def("bank_generate", &bank_generate, py::arg("bank"), py::arg("nbits"));
  m.def("lfsr_cost", py::overload_cast<const LfsrSpec&, UnitCosts>(&lfsr_cost),
        py::arg("lfsr"), py::arg("costs") = UnitCosts{});
  m.def("parallel_cost", py::overload_cast<const ParallelLinearMap&, UnitCosts>(&lfsr_cost),
        py::arg("map"), py::arg("costs") = UnitCosts{});
  m.def("decimation_cost", py::overload_cast<const DecimationBank&, UnitCosts>(&lfsr_cost),
        py::arg("bank"), py::arg("costs") = UnitCosts{});

  py::class_<CompareRow>(m, "CompareRow")
      .def_readonly("id", &CompareRow::id)
      .def_readonly("k", &CompareRow::k)
      .def_readonly("p", &CompareRow::p)
      .def_readonly("bm_stages", &CompareRow::bm_stages)
      .def_readonly("bm_cost", &CompareRow::bm_cost)
      .def_readonly("lfsr_bm_length", &CompareRow::lfsr_bm_length)
      .def_readonly("lfsr_parallel_cost", &CompareRow::lfsr_parallel_cost)
      .def_readonly("decimation_cost", &CompareRow::decimation_cost)
      .def_readonly("decimation_total_bits", &CompareRow::decimation_total_bits)
      .def("ratio_parallel", &CompareRow::ratio_parallel)
      .def("ratio_decimation", &CompareRow::ratio_decimation);

  m.def("parallelization_fixpoint", &parallelization_fixpoint, py::arg("a2"),
        py::arg("p_cap") = 32u);
  m.def(
      "compare_sequence",
      [](const std::string& id, const DigitSequence& a2, std::optional<uint32_t> p,
         DcPolicy policy) { return compare_sequence(id, a2, p, policy); },
      py::arg("id"), py::arg("a2"), py::arg("p") = std::nullopt,
      py::arg("policy") = DcPolicy::zero);

  m.def("parse_sequence_text", &parse_sequence_text, py::arg("text"),
        py::arg("source") = "<string>");
  m.def("format_sequence_text", &format_sequence_text, py::arg("seq"));
  m.def("format_machine_text", &format_machine_text, py::arg("machine"), py::arg("p"),
        py::arg("policy"));
  m.def("format_lfsr_text", &format_lfsr_text, py::arg("lfsr"));
}
