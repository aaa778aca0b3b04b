#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "icosa/notation.hpp"
#include "icosa/radsum.hpp"

using namespace icosa;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + ICOSA_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// data rows of csv/text output: everything after the comment block and header
std::vector<std::string> data_rows(const std::string& out) {
  std::vector<std::string> rows;
  std::istringstream is(out);
  std::string line;
  bool seen_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream is(line);
  std::string cell;
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("group listings") {
  const RunResult els = run("elements --format csv");
  CHECK(els.code == 0);
  CHECK(data_rows(els.out).size() == 120);
  CHECK(els.out.find("E'") != std::string::npos);

  const RunResult cls = run("classes --format csv");
  CHECK(cls.code == 0);
  CHECK(data_rows(cls.out).size() == 9);
}

TEST_CASE("table export matches the published blocks") {
  const RunResult r = run("table1 --gamma E2p --format csv");
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 4);
  for (const std::string& row : rows) {
    const auto cells = split_csv(row);
    REQUIRE(cells.size() == 8);
    CHECK(cells[0] == "E2p");
    CHECK(cells[7] == "6");
    // coefficient tokens round-trip through the parser
    for (int i = 3; i < 7; ++i) {
      const Cyclo v = parse_coeff_token(cells[static_cast<size_t>(i)]);
      CHECK(coeff_token(v) == cells[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("multiplicity content") {
  const RunResult r = run("multiplicity --twoj 6 --format csv");
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "T2,1");
  CHECK(rows[1] == "G,1");

  // --j with --half names the same doubled label as --twoj
  const RunResult a = run("multiplicity --j 7 --half --format csv");
  const RunResult b = run("multiplicity --twoj 7 --format csv");
  CHECK(a.code == 0);
  CHECK(a.out.find("E2p,1") != std::string::npos);
  CHECK(data_rows(a.out) == data_rows(b.out));
}

TEST_CASE("adapted basis export") {
  const RunResult r = run("combine --gamma A --twoj 0 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"gamma\": \"A\"") != std::string::npos);
  CHECK(r.out.find("sqrt(30)*z1{0:2}") != std::string::npos);  // rawscale 2 sqrt(30)
  CHECK(r.out.find("\"seed\"") != std::string::npos);

  const RunResult p = run("combine --gamma T2 --twoj 6 --parity odd --format json");
  CHECK(p.code == 0);
  CHECK(p.out.find("\"gamma\": \"T2_u\"") != std::string::npos);
}

TEST_CASE("single projections and amplitude round-trips") {
  const RunResult r =
      run("combine --gamma G --twoj 6 --mu 2 --lambda -4 --rho 6 --format csv");
  CHECK(r.code == 0);
  const auto rows = data_rows(r.out);
  REQUIRE(rows.size() == 1);
  const auto cells = split_csv(rows[0]);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == "2");
  Rational v(18);
  CHECK(RadSum::parse(cells[1]) == RadSum::sqrt_rational(v));

  const RunResult f = run("combine --gamma E2p --j 7 --half --format csv");
  CHECK(f.code == 0);
  for (const std::string& row : data_rows(f.out)) {
    const auto c = split_csv(row);
    REQUIRE(c.size() == 7);
    CHECK(RadSum::parse(c[5]).exact_string() == c[5]);
    CHECK(RadSum::parse(c[6]).exact_string() == c[6]);
  }
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run("table1 --gamma NOPE").code == 2);
  CHECK(run("djmatrix --twoj 2 --element Q9").code == 2);
  CHECK(run("combine --gamma A --twoj 0 --mu 0").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("multiplicity --j 3 --twoj 6").code == 2);
  CHECK(run("multiplicity").code == 2);
  CHECK(run("combine --gamma E1p --twoj 1 --mu 1 --lambda 1 --rho 99").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::string args = "charactertable --format json";
  CHECK(run(args).out == run(args).out);
  const std::string comb = "combine --gamma E1p --twoj 1 --format json";
  CHECK(run(comb).out == run(comb).out);
}

TEST_CASE("environment default format") {
  const RunResult r = run("classes", "ICOSA_FORMAT=json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"classes\"") != std::string::npos);
  // a value that fails validation is ignored like an unset variable
  const RunResult fallback = run("classes", "ICOSA_FORMAT=nonsense");
  CHECK(fallback.code == 0);
  CHECK(fallback.out.find("representative") != std::string::npos);
  // an explicit flag still wins over the environment
  const RunResult flag = run("classes --format csv", "ICOSA_FORMAT=json");
  CHECK(flag.code == 0);
  CHECK(flag.out.find("index,size,representative") != std::string::npos);
}

TEST_CASE("verify fast is green and fixture-sensitive") {
  const RunResult ok = run("verify fast");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("pass") != std::string::npos);

  // corrupt one coefficient; the failing cell must be named
  std::ifstream in(std::string(ICOSA_FIXTURE_DIR) + "/table1.txt");
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const std::string good = "T1 2 2 1 0 -p^-1 -p 4";
  const auto pos = text.find(good);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, good.size(), "T1 2 2 1 0 -p^-1 p 4");
  const std::string bad_path = "/tmp/icosa_bad_table.txt";
  std::ofstream(bad_path) << text;

  const RunResult bad = run("verify fast", "ICOSA_TABLE1=" + bad_path);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("cell (T1, 2, 2)") != std::string::npos);
}
