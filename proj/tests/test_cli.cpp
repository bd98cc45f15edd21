// Drives the installed CLI binary; the path arrives via AGCODES_CLI.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("AGCODES_CLI");
  REQUIRE_MESSAGE(p != nullptr, "AGCODES_CLI must point at the binary");
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = "'" + cli_path() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("params prints the record and the field") {
  const RunResult r = run("params --instance D2 --point Pinf --d 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[91, 80, 9] over GF(49)\n");

  const RunResult b = run("params --instance B1 --point P3 --d 12");
  CHECK(b.out == "[225, 207, 12] over GF(81)\n");
}

TEST_CASE("semigroup subcommand prints sequences and r_d") {
  const RunResult r = run("semigroup --gens 2,7 --nu 0..12 --r 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("genus: 3") != std::string::npos);
  CHECK(r.out.find("rho[1..13]: 0 2 4 6 7 8 9 10 11 12 13 14 15") != std::string::npos);
  CHECK(r.out.find("nu[0..12]: 1 2 3 4 2 5 4 6 6 7 8 9 10") != std::string::npos);
  CHECK(r.out.find("r_9: 11") != std::string::npos);

  const RunResult full = run("semigroup --gens 1 --r 2");
  CHECK(full.exit_code == 0);
  CHECK(full.out.find("r_2: 1") != std::string::npos);
}

TEST_CASE("catalog lists the built-ins") {
  const RunResult r = run("catalog");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 12);
  CHECK(r.out.find("D2 D:q0=7,m=2 q=49 g=3 N=92") != std::string::npos);
  CHECK(r.out.find("E3") != std::string::npos);
}

TEST_CASE("table row counts per field") {
  CHECK(count_lines(run("table --q 64 --format csv").out) == 12);   // header + 11
  CHECK(count_lines(run("table --q 81 --format csv").out) == 18);   // header + 17
  CHECK(count_lines(run("table --q 49 --format csv").out) == 120);  // header + 119
}

TEST_CASE("table markdown carries the published column layout") {
  const RunResult r = run("table --q 64");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("| n | k | d | s | n-s | k-s | d | code |", 0) == 0);
  CHECK(r.out.find("| 176 | 162 | 10 | 29 | 147 | 133 | 10 | (D3b) |") !=
        std::string::npos);
}

TEST_CASE("table runs are byte-identical") {
  const std::string a = run("table --q 256 --format csv").out;
  const std::string b = run("table --q 256 --format csv").out;
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("verify emits the JSON report") {
  const RunResult r = run("verify --instance D2 --d 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"n\": 91, \"k_expected\": 80, \"k_actual\": 80, \"d_design\": 9, "
        "\"d_actual_or_bound\": 9, \"status\": \"ok\"}\n");
}

TEST_CASE("matrix writes CSV of element indices") {
  const std::string path = "/tmp/agcodes_matrix_test.csv";
  const RunResult r = run("matrix --instance H:q0=2 --d 3 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first == "1,1,1,1,1,1,1,1");
  int rows = 1;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);  // r_3 of <2,3>
  std::remove(path.c_str());

  const RunResult bad = run("matrix --instance D2 --point P2 --d 9");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("compare consumes table JSON and internal records identically") {
  const std::string records = "/tmp/agcodes_records_test.json";
  const std::string baseline = "/tmp/agcodes_baseline_test.csv";
  {
    const RunResult table = run("table --q 81 --format json");
    REQUIRE(table.exit_code == 0);
    std::ofstream out(records);
    out << table.out;
  }
  {
    std::ofstream out(baseline);
    out << "q,n,k,d_best\n";
    out << "81,225,207,11\n";  // beaten by the (B1)(E2) record at d=12
    out << "81,224,206,11\n";
    out << "81,223,205,12\n";  // catches up: s_max = 1
    out << "81,243,225,12\n";  // ties the (C4) record: non-improving
  }
  const RunResult via_json = run("compare --baseline " + baseline + " --records " + records);
  const RunResult via_q = run("compare --baseline " + baseline + " --q 81");
  CHECK(via_json.exit_code == 0);
  CHECK(via_json.out == via_q.out);
  CHECK(via_json.out.find("81,225,207,12,(B1)(E2),improves,1") != std::string::npos);
  CHECK(via_json.out.find("81,243,225,12,(C4),non-improving,") != std::string::npos);
  CHECK(via_json.out.find("unknown") != std::string::npos);
  std::remove(records.c_str());
  std::remove(baseline.c_str());
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("params --instance D2").exit_code == 2);          // missing --d
  CHECK(run("params --instance D9 --d 9").exit_code == 1);    // unknown instance
  CHECK(run("params --instance D2 --point Pinf --d 90").exit_code == 1);  // k < 1
  CHECK(run("table --q 100").exit_code == 1);
  CHECK(run("semigroup --gens 4,6").exit_code == 1);
  CHECK(run("--help").exit_code == 0);
}
