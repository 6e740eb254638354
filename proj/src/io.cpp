#include "binmach/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace binmach {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  out << text;
  if (!out) throw ParseError(path, 0, "write failed");
}

char digit_char(uint64_t v) {
  return v < 10 ? char('0' + v) : char('a' + (v - 10));
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'v') return c - 'a' + 10;
  return -1;
}

// Strips a '#' comment and surrounding whitespace; empty result means the
// line carries nothing.
std::string logical_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& tok, const std::string& source, size_t line,
                   const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(source, line, std::string("expected an unsigned integer for ") + what +
                                       ", got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(source, line, std::string(what) + " out of range: '" + tok + "'");
  }
}

std::string hex_of_bits(const std::vector<uint8_t>& bits) {
  // bits[i] is bit i of the value; emit ceil(L/4) lowercase nibbles, most
  // significant first.  Empty input encodes as "0".
  if (bits.empty()) return "0";
  const size_t nibbles = (bits.size() + 3) / 4;
  std::string out(nibbles, '0');
  for (size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    const size_t nib = i / 4;
    char& c = out[nibbles - 1 - nib];
    const int v = digit_value(c) + (1 << (i % 4));
    c = "0123456789abcdef"[v];
  }
  return out;
}

std::vector<uint8_t> bits_of_hex(const std::string& hex, size_t nbits,
                                 const std::string& source, size_t line, const char* what) {
  std::vector<uint8_t> bits(nbits, 0);
  for (size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[hex.size() - 1 - i];
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else
      throw ParseError(source, line,
                       std::string("invalid hex digit '") + c + "' in " + what);
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const size_t bit = i * 4 + b;
      if (bit >= nbits)
        throw ParseError(source, line,
                         std::string(what) + " has a bit set beyond position " +
                             std::to_string(nbits ? nbits - 1 : 0));
      bits[bit] = 1;
    }
  }
  return bits;
}

}  // namespace

DigitSequence parse_sequence_text(const std::string& text, const std::string& source) {
  uint64_t m = 2;
  bool m_seen = false;
  bool digits_seen = false;
  std::vector<uint64_t> digits;

  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = logical_line(raw);
    size_t i = 0;
    if (!digits_seen && !m_seen && line.rfind("m=", 0) == 0) {
      m = parse_u64(line.substr(2), source, lineno, "the radix");
      if (m < 2 || m > 32)
        throw ParseError(source, lineno, "radix must be between 2 and 32");
      m_seen = true;
      continue;
    }
    for (; i < line.size(); ++i) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      const int v = digit_value(c);
      if (v < 0)
        throw ParseError(source, lineno,
                         std::string("invalid digit character '") + c + "'");
      if (uint64_t(v) >= m)
        throw ParseError(source, lineno,
                         std::string("digit '") + c + "' is not below the radix " +
                             std::to_string(m));
      digits.push_back(uint64_t(v));
      digits_seen = true;
    }
  }
  if (digits.empty()) throw ParseError(source, lineno, "sequence file holds no digits");
  return DigitSequence(m, std::move(digits));
}

std::string format_sequence_text(const DigitSequence& seq) {
  std::string out;
  if (seq.m != 2) out += "m=" + std::to_string(seq.m) + "\n";
  for (size_t i = 0; i < seq.digits.size(); ++i) {
    out += digit_char(seq.digits[i]);
    if ((i + 1) % 64 == 0 && i + 1 != seq.digits.size()) out += '\n';
  }
  out += '\n';
  return out;
}

DigitSequence read_sequence_file(const std::string& path) {
  return parse_sequence_text(read_file(path), path);
}

void write_sequence_file(const std::string& path, const DigitSequence& seq) {
  write_file(path, format_sequence_text(seq));
}

MachineFile parse_machine_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;

  bool header = false;
  std::map<std::string, uint64_t> scalars;  // m, n, p, init
  bool policy_seen = false;
  DcPolicy policy = DcPolicy::zero;
  std::map<uint64_t, uint64_t> transitions;
  size_t first_line = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = logical_line(raw);
    if (line.empty()) continue;
    if (!header) {
      if (line != "BINMACH 1")
        throw ParseError(source, lineno, "expected header 'BINMACH 1', got '" + line + "'");
      header = true;
      first_line = lineno;
      continue;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    const std::string value = logical_line(rest);
    if (key == "m" || key == "n" || key == "p" || key == "init") {
      if (scalars.count(key))
        throw ParseError(source, lineno, "duplicate '" + key + "' line");
      scalars[key] = parse_u64(value, source, lineno, key.c_str());
    } else if (key == "dc") {
      if (policy_seen) throw ParseError(source, lineno, "duplicate 'dc' line");
      if (value == "zero")
        policy = DcPolicy::zero;
      else if (value == "one")
        policy = DcPolicy::one;
      else if (value == "minimize")
        policy = DcPolicy::minimize;
      else
        throw ParseError(source, lineno,
                         "don't-care policy must be zero, one, or minimize; got '" + value +
                             "'");
      policy_seen = true;
    } else if (key == "T") {
      std::istringstream ts(value);
      std::string cur_tok, next_tok, extra;
      ts >> cur_tok >> next_tok;
      if (ts >> extra)
        throw ParseError(source, lineno, "transition line has trailing data '" + extra + "'");
      const uint64_t cur = parse_u64(cur_tok, source, lineno, "the current state");
      const uint64_t next = parse_u64(next_tok, source, lineno, "the next state");
      if (transitions.count(cur))
        throw ParseError(source, lineno,
                         "duplicate transition for state " + std::to_string(cur));
      transitions[cur] = next;
    } else {
      throw ParseError(source, lineno, "unknown directive '" + key + "'");
    }
  }
  if (!header) throw ParseError(source, lineno, "expected header 'BINMACH 1'");
  for (const char* key : {"m", "n", "p", "init"})
    if (!scalars.count(key))
      throw ParseError(source, lineno, std::string("missing '") + key + "' line");
  if (!policy_seen) throw ParseError(source, lineno, "missing 'dc' line");
  if (transitions.empty()) throw ParseError(source, lineno, "machine has no transitions");
  if (scalars["p"] < 1 || scalars["p"] > 32)
    throw ParseError(source, lineno, "p must be between 1 and 32");

  try {
    MAryMachine mm(scalars["m"], scalars["n"], std::move(transitions), scalars["init"]);
    return MachineFile{std::move(mm), uint32_t(scalars["p"]), policy};
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, first_line, e.what());
  }
}

std::string format_machine_text(const MAryMachine& mm, uint32_t p, DcPolicy policy) {
  std::ostringstream out;
  out << "BINMACH 1\n";
  out << "m " << mm.m() << "\n";
  out << "n " << mm.n() << "\n";
  out << "p " << p << "\n";
  out << "init " << mm.initial() << "\n";
  out << "dc " << dc_policy_name(policy) << "\n";
  for (const auto& [cur, next] : mm.transitions()) out << "T " << cur << " " << next << "\n";
  return out.str();
}

MachineFile read_machine_file(const std::string& path) {
  return parse_machine_text(read_file(path), path);
}

void write_machine_file(const std::string& path, const MAryMachine& mm, uint32_t p,
                        DcPolicy policy) {
  write_file(path, format_machine_text(mm, p, policy));
}

LfsrSpec parse_lfsr_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  bool l_seen = false, poly_seen = false, fill_seen = false;
  uint64_t L = 0;
  LfsrSpec spec;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = logical_line(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key, value, extra;
    ls >> key >> value;
    if (ls >> extra)
      throw ParseError(source, lineno, "trailing data '" + extra + "'");
    if (key == "LFSR") {
      if (l_seen) throw ParseError(source, lineno, "duplicate 'LFSR' line");
      L = parse_u64(value, source, lineno, "the register length");
      l_seen = true;
    } else if (key == "poly") {
      if (!l_seen) throw ParseError(source, lineno, "'poly' before 'LFSR'");
      if (poly_seen) throw ParseError(source, lineno, "duplicate 'poly' line");
      spec.coeffs = bits_of_hex(value, L, source, lineno, "the feedback polynomial");
      poly_seen = true;
    } else if (key == "fill") {
      if (!l_seen) throw ParseError(source, lineno, "'fill' before 'LFSR'");
      if (fill_seen) throw ParseError(source, lineno, "duplicate 'fill' line");
      spec.fill = bits_of_hex(value, L, source, lineno, "the fill");
      fill_seen = true;
    } else {
      throw ParseError(source, lineno, "unknown directive '" + key + "'");
    }
  }
  if (!l_seen) throw ParseError(source, lineno, "missing 'LFSR' line");
  if (!poly_seen) throw ParseError(source, lineno, "missing 'poly' line");
  if (!fill_seen) throw ParseError(source, lineno, "missing 'fill' line");
  return spec;
}

std::string format_lfsr_text(const LfsrSpec& l) {
  std::ostringstream out;
  out << "LFSR " << l.length() << "\n";
  out << "poly " << hex_of_bits(l.coeffs) << "\n";
  out << "fill " << hex_of_bits(l.fill) << "\n";
  return out.str();
}

LfsrSpec read_lfsr_file(const std::string& path) {
  return parse_lfsr_text(read_file(path), path);
}

void write_lfsr_file(const std::string& path, const LfsrSpec& l) {
  write_file(path, format_lfsr_text(l));
}

std::string dc_policy_name(DcPolicy policy) {
  switch (policy) {
    case DcPolicy::zero: return "zero";
    case DcPolicy::one: return "one";
    case DcPolicy::minimize: return "minimize";
  }
  return "zero";
}

}  // namespace binmach
