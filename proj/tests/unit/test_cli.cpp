// End-to-end tests spawning the installed command-line binary.  The binary
// path is injected at compile time; every test works in its own scratch
// directory under the system temp root.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "binmach/io.hpp"
#include "doctest.h"
#include "test_data.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BINMACH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir(const char* tag) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("binmach_cli_" + std::to_string(getpid()) + "_" + tag + "_" +
                        std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("cli usage errors exit with code 3") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("synth --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 3);             // subcommand required
  CHECK(run_cli("frobnicate").exit_code == 3);   // unknown subcommand
  CHECK(run_cli("synth").exit_code == 3);        // missing --input
  CHECK(run_cli("gen random --length 0").exit_code == 3);
  CHECK(run_cli("gen legendre --prime 9 --out /dev/null").exit_code == 3);
}

TEST_CASE("cli reports unreadable or malformed inputs with code 2") {
  const fs::path dir = fresh_dir("parse");
  CHECK(run_cli("synth --input " + (dir / "missing.seq").string()).exit_code == 2);
  std::ofstream(dir / "bad.seq") << "01x1\n";
  const RunResult r = run_cli("synth --input " + (dir / "bad.seq").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("bad.seq:1") != std::string::npos);
  std::ofstream(dir / "bad.bm") << "BINMACH 9\n";
  CHECK(run_cli("sim " + (dir / "bad.bm").string()).exit_code == 2);
}

TEST_CASE("gen writes deterministic sequence files") {
  const fs::path dir = fresh_dir("gen");
  const std::string a = (dir / "a.seq").string();
  const std::string b = (dir / "b.seq").string();
  CHECK(run_cli("gen random --length 16 --seed 1 --out " + a).exit_code == 0);
  CHECK(run_cli("gen random --length 16 --seed 1 --out " + b).exit_code == 0);
  CHECK(slurp(a) == slurp(b));

  CHECK(run_cli("gen legendre --prime 7 --out " + a).exit_code == 0);
  CHECK(slurp(a) == "1001011\n");

  CHECK(run_cli("gen golay --order 2 --out " + (dir / "pair").string()).exit_code == 0);
  CHECK(slurp(dir / "pair.a") == "0001\n");
  CHECK(slurp(dir / "pair.b") == "0010\n");

  // Without --out the sequence lands on standard output.
  const RunResult stdout_run = run_cli("gen legendre --prime 7");
  CHECK(stdout_run.exit_code == 0);
  CHECK(stdout_run.output == "1001011\n");
}

TEST_CASE("synth prints the stats block and writes a loadable machine") {
  const fs::path dir = fresh_dir("synth");
  const std::string seq = (dir / "in.seq").string();
  const std::string machine = (dir / "out.bm").string();
  {
    std::ofstream out(seq);
    for (uint64_t bit : testdata::kA2) out << bit;
    out << "\n";
  }

  const RunResult p2 = run_cli("synth --input " + seq + " --parallel 2 --out " + machine);
  CHECK(p2.exit_code == 0);
  CHECK(has_line(p2.output, "k=20"));
  CHECK(has_line(p2.output, "m=4"));
  CHECK(has_line(p2.output, "pad=0"));
  CHECK(has_line(p2.output, "n_max=4"));
  CHECK(has_line(p2.output, "stages=4"));
  CHECK(has_line(p2.output, "registers=4"));

  CHECK(has_line(run_cli("synth --input " + seq).output, "stages=5"));
  CHECK(has_line(run_cli("synth --input " + seq + " --parallel 3").output, "stages=3"));

  const binmach::MachineFile mf = binmach::read_machine_file(machine);
  CHECK(mf.machine.transitions() == testdata::kQuaternaryTransitions);
  CHECK(mf.p == 2);
}

TEST_CASE("sim reproduces the source sequence and verifies --expect") {
  const fs::path dir = fresh_dir("sim");
  const std::string seq = (dir / "in.seq").string();
  const std::string machine = (dir / "m.bm").string();
  {
    std::ofstream out(seq);
    for (uint64_t bit : testdata::kA2) out << bit;
    out << "\n";
  }
  REQUIRE(run_cli("synth --input " + seq + " --parallel 2 --out " + machine).exit_code ==
          0);

  const RunResult sim = run_cli("sim " + machine);
  CHECK(sim.exit_code == 0);
  CHECK(sim.output == "00110111001011101100\n");

  CHECK(run_cli("sim " + machine + " --expect " + seq).exit_code == 0);
  CHECK(run_cli("sim " + machine + " --cycles 3").output == "001101\n");
  CHECK(run_cli("sim " + machine + " --cycles 0").exit_code == 3);

  // A different sequence of the same length must be rejected.
  std::ofstream(dir / "other.seq") << "11110111001011101100\n";
  const RunResult bad = run_cli("sim " + machine + " --expect " +
                                (dir / "other.seq").string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("mismatch") != std::string::npos);
}

TEST_CASE("every generator round-trips through synth and sim") {
  const fs::path dir = fresh_dir("roundtrip");
  std::vector<std::string> sources;
  for (int seed : {1, 2}) {
    const std::string path = (dir / ("rand" + std::to_string(seed) + ".seq")).string();
    REQUIRE(run_cli("gen random --length 100 --seed " + std::to_string(seed) +
                    " --out " + path)
                .exit_code == 0);
    sources.push_back(path);
  }
  for (int prime : {7, 11}) {
    const std::string path = (dir / ("leg" + std::to_string(prime) + ".seq")).string();
    REQUIRE(run_cli("gen legendre --prime " + std::to_string(prime) + " --out " + path)
                .exit_code == 0);
    sources.push_back(path);
  }
  const std::string base = (dir / "golay").string();
  REQUIRE(run_cli("gen golay --order 3 --out " + base).exit_code == 0);
  sources.push_back(base + ".a");
  sources.push_back(base + ".b");

  int machine_index = 0;
  for (const std::string& src : sources) {
    for (int p = 1; p <= 8; ++p) {
      const std::string machine =
          (dir / ("m" + std::to_string(machine_index++) + ".bm")).string();
      const RunResult synth = run_cli("synth --input " + src + " --parallel " +
                                      std::to_string(p) + " --out " + machine);
      CHECK(synth.exit_code == 0);
      CHECK(run_cli("sim " + machine + " --expect " + src).exit_code == 0);
    }
  }
}

TEST_CASE("synth options: permutation policies and don't-care policies") {
  const fs::path dir = fresh_dir("opts");
  const std::string seq = (dir / "in.seq").string();
  REQUIRE(run_cli("gen random --length 60 --seed 3 --out " + seq).exit_code == 0);

  const std::string m1 = (dir / "m1.bm").string();
  const std::string m2 = (dir / "m2.bm").string();
  CHECK(run_cli("synth --input " + seq + " --parallel 2 --perm shuffle:5 --out " + m1)
            .exit_code == 0);
  CHECK(run_cli("synth --input " + seq + " --parallel 2 --perm shuffle:5 --out " + m2)
            .exit_code == 0);
  CHECK(slurp(m1) == slurp(m2));  // same seed, same machine
  CHECK(run_cli("sim " + m1 + " --expect " + seq).exit_code == 0);

  CHECK(run_cli("synth --input " + seq + " --perm shuffle:").exit_code == 3);
  CHECK(run_cli("synth --input " + seq + " --perm sorted").exit_code == 3);
  CHECK(run_cli("synth --input " + seq + " --dc-policy maybe").exit_code == 3);

  const RunResult minimized =
      run_cli("synth --input " + seq + " --parallel 2 --dc-policy minimize --out " + m1);
  CHECK(minimized.exit_code == 0);
  CHECK(has_line(minimized.output, "dc=minimize"));
  CHECK(run_cli("sim " + m1 + " --expect " + seq).exit_code == 0);
}

TEST_CASE("synth warns about periodic inputs on standard error") {
  const fs::path dir = fresh_dir("warn");
  const std::string seq = (dir / "per.seq").string();
  std::ofstream(seq) << "01010101\n";
  const RunResult r = run_cli("synth --input " + seq + " --parallel 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("warning:") != std::string::npos);
  CHECK(r.output.find("repeats every 2") != std::string::npos);
}

TEST_CASE("compare emits a table or csv") {
  const fs::path dir = fresh_dir("compare");
  const std::string seq = (dir / "in.seq").string();
  REQUIRE(run_cli("gen random --length 64 --seed 9 --out " + seq).exit_code == 0);

  const RunResult table = run_cli("compare --input " + seq);
  CHECK(table.exit_code == 0);
  CHECK(table.output.substr(0, 2) == "id");          // header row first
  CHECK(table.output.find("bm_cost") != std::string::npos);
  CHECK(table.output.find("\nin ") != std::string::npos);  // then the data row

  const RunResult csv =
      run_cli("compare --input " + seq + " --input " + seq + " --format csv --parallel 2");
  CHECK(csv.exit_code == 0);
  std::istringstream lines(csv.output);
  std::string header, row1, row2;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row1));
  REQUIRE(std::getline(lines, row2));
  CHECK(header.substr(0, 5) == "id,k,");
  CHECK(row1 == row2);
  CHECK(row1.substr(0, 8) == "in,64,2,");

  CHECK(run_cli("compare --input " + seq + " --parallel nope").exit_code == 3);
  CHECK(run_cli("compare --input " + seq + " --format yaml").exit_code == 3);
}
