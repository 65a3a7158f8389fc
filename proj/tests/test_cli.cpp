// Contract tests for the command-line tool. Each case spawns the installed
// binary (path injected at compile time), captures its streams and checks
// the file and CSV surface: column layout, determinism, sweep error rows and
// the size cap. Everything runs in the test's working directory.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kHeader =
    "N,n,seed,algorithm,wall_time_seconds,peak_store_nodes,result_size,op_syntheses,"
    "op_negations,op_quantifier_blocks,op_quantifier_bit_ops,op_argument_reorders,"
    "chi_E_size,per_level_sizes";
constexpr const char* kPreamble = "# igbdd 0.1.0, rng mt19937_64";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct RunResult {
  int status = -1;
  std::string out, err;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_case_stdout.tmp", err_path = "cli_case_stderr.tmp";
  std::string cmd =
      std::string(IGBDD_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  std::string f;
  while (std::getline(in, f, ',')) out.push_back(f);
  return out;
}

// A data row with the wall-time column blanked, for determinism comparisons.
std::string stable_row(const std::string& row) {
  std::vector<std::string> f = fields(row);
  REQUIRE(f.size() == 14);
  f[4] = "";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
  return out;
}

}  // namespace

TEST_CASE("generate is seed-reproducible and labels its output") {
  auto a = run_cli("generate unit --n 20 --seed 7 --out cli_gen_a.tmp");
  auto b = run_cli("generate unit --n 20 --seed 7 --out cli_gen_b.tmp");
  auto c = run_cli("generate unit --n 20 --seed 8 --out cli_gen_c.tmp");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  REQUIRE(c.status == 0);
  std::string fa = slurp("cli_gen_a.tmp"), fb = slurp("cli_gen_b.tmp"),
              fc = slurp("cli_gen_c.tmp");
  CHECK(fa == fb);
  CHECK(fa != fc);
  CHECK(fa.find("# kind unit, seed 7, rng mt19937_64") != std::string::npos);
  CHECK(fa.find("20 unit") != std::string::npos);
  std::remove("cli_gen_a.tmp");
  std::remove("cli_gen_b.tmp");
  std::remove("cli_gen_c.tmp");
}

TEST_CASE("single runs print the preamble, the header and one data row") {
  REQUIRE(run_cli("generate unit --n 12 --seed 5 --out cli_fam.tmp").status == 0);

  auto match = run_cli("match cli_fam.tmp --check");
  REQUIRE(match.status == 0);
  auto ml = lines(match.out);
  REQUIRE(ml.size() == 3);
  CHECK(ml[0] == kPreamble);
  CHECK(ml[1] == kHeader);
  auto row = fields(ml[2]);
  REQUIRE(row.size() == 14);
  CHECK(row[0] == "12");
  CHECK(row[1] == "4");  // 12 labels need 4 bits
  CHECK(row[3] == "match");
  CHECK(row[13].find(';') != std::string::npos);  // per-level sizes are ';'-joined

  auto enc = run_cli("encode-stats cli_fam.tmp");
  REQUIRE(enc.status == 0);
  CHECK(fields(lines(enc.out).at(2)).at(3) == "encode");

  auto col = run_cli("color cli_fam.tmp --mode general --check");
  REQUIRE(col.status == 0);
  CHECK(fields(lines(col.out).at(2)).at(3) == "color-general");

  std::remove("cli_fam.tmp");
}

TEST_CASE("repeated runs differ at most in the wall-time column") {
  REQUIRE(run_cli("generate general --n 30 --seed 11 --out cli_det.tmp").status == 0);
  auto a = run_cli("color cli_det.tmp --mode general --check");
  auto b = run_cli("color cli_det.tmp --mode general --check");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  auto la = lines(a.out), lb = lines(b.out);
  REQUIRE(la.size() == lb.size());
  CHECK(stable_row(la.at(2)) == stable_row(lb.at(2)));
  std::remove("cli_det.tmp");
}

TEST_CASE("domain errors surface on stderr with a nonzero status") {
  REQUIRE(run_cli("generate general --n 10 --seed 2 --out cli_bad.tmp").status == 0);
  auto r = run_cli("match cli_bad.tmp");  // matching needs a unit family
  CHECK(r.status == 1);
  CHECK(r.err.find("igbdd:") != std::string::npos);
  CHECK(r.out.find("match,") == std::string::npos);  // no data row was emitted
  auto missing = run_cli("match cli_no_such_file.tmp");
  CHECK(missing.status == 1);
  std::remove("cli_bad.tmp");
}

TEST_CASE("an empty sweep config produces a header-only table") {
  spill("cli_empty.json", "{}");
  auto r = run_cli("sweep cli_empty.json");
  REQUIRE(r.status == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == kPreamble);
  CHECK(l[1] == kHeader);
  std::remove("cli_empty.json");
}

TEST_CASE("sweeps order rows by size and flatten the configured grid") {
  spill("cli_grid.json",
        R"({"sizes":[16,8],"seed_count":2,"kinds":["unit"],"algorithms":["encode","match"]})");
  auto r = run_cli("sweep cli_grid.json --check");
  REQUIRE(r.status == 0);
  auto l = lines(r.out);
  REQUIRE(l.size() == 2 + 8);  // 2 sizes x 2 algorithms x 2 seeds
  long long last_n = 0;
  for (std::size_t i = 2; i < l.size(); ++i) {
    auto f = fields(l[i]);
    REQUIRE(f.size() == 14);
    long long n = std::stoll(f[0]);
    CHECK(n >= last_n);  // ascending size, whatever the config order
    last_n = n;
  }
  std::remove("cli_grid.json");
}

TEST_CASE("per-run failures become comment rows and the sweep continues") {
  spill("cli_wc.json",
        R"({"log2_sizes":[3],"seed_count":2,"kinds":["worstcase"],"algorithms":["match","encode"]})");
  auto r = run_cli("sweep cli_wc.json");
  REQUIRE(r.status == 0);
  auto l = lines(r.out);
  int errors = 0, rows = 0;
  for (std::size_t i = 2; i < l.size(); ++i) {
    if (l[i].rfind("# error kind=worstcase N=8", 0) == 0)
      ++errors;  // matching rejects the non-unit family
    else
      ++rows;
  }
  CHECK(errors == 2);
  CHECK(rows == 2);  // the encode runs still made it out
  std::remove("cli_wc.json");
}

TEST_CASE("the sweep size cap refuses oversized runs unless raised") {
  spill("cli_cap.json",
        R"({"sizes":[32768],"seed_count":1,"kinds":["unit"],"algorithms":["encode"]})");
  auto refused = run_cli("sweep cli_cap.json");
  CHECK(refused.status == 1);
  CHECK(refused.err.find("--max-n") != std::string::npos);
  auto allowed = run_cli("sweep cli_cap.json --max-n 32768");
  REQUIRE(allowed.status == 0);
  CHECK(lines(allowed.out).size() == 3);
  std::remove("cli_cap.json");
}
