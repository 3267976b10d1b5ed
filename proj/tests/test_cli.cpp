#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "lpac_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter));
  const fs::path err = dir / ("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(LPACHECK_BIN) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

std::string fx(const char* name) { return lpt::fixture_path(name); }

}  // namespace

TEST_CASE("check exit codes") {
  const RunResult ok = run("check " + fx("example1.axioms") + " " +
                           fx("example1.proof") + " --target " +
                           fx("example1.target") + " --machine --stats");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("ACCEPTED") != std::string::npos);
  CHECK(ok.out.find("l8") != std::string::npos);
  CHECK(ok.err.find("STATUS=accepted STEP=- LINE=-") != std::string::npos);
  CHECK(ok.out.find("Steps") != std::string::npos);

  // A wrong target distinguishes "no target" from rejection.
  const fs::path dir = fs::temp_directory_path() / "lpac_cli_test";
  fs::create_directories(dir);
  {
    std::ofstream t(dir / "two.target");
    t << "2;\n";
  }
  const RunResult missing =
      run("check " + fx("example1.axioms") + " " + fx("example1.proof") +
          " --target " + (dir / "two.target").string() + " --machine");
  CHECK(missing.code == 1);
  CHECK(missing.err.find("STATUS=no-target") != std::string::npos);

  // Mutated proof: rejected with the step's own line.
  {
    std::ofstream p(dir / "mut.proof");
    std::string text = lpt::read_fixture("example1.proof");
    const auto pos = text.find("x-2*z");
    text.replace(pos, 5, "x-2*y");
    p << text;
  }
  const RunResult rejected =
      run("check " + fx("example1.axioms") + " " +
          (dir / "mut.proof").string() + " --target " +
          fx("example1.target") + " --machine");
  CHECK(rejected.code == 1);
  CHECK(rejected.err.find("STATUS=rejected STEP=1 LINE=2") !=
        std::string::npos);

  // Truncated file: parse error.
  {
    std::ofstream p(dir / "trunc.proof");
    p << "N 1 { inputs [p1: v1";
  }
  const RunResult truncated = run("check " + fx("example1.axioms") + " " +
                                  (dir / "trunc.proof").string());
  CHECK(truncated.code == 2);

  const RunResult unreadable =
      run("check " + fx("example1.axioms") + " /nonexistent.proof");
  CHECK(unreadable.code == 2);

  // Several proofs at once: one verdict per file, max exit code wins.
  const RunResult multi =
      run("check " + fx("example1.axioms") + " " + fx("example1.proof") + " " +
          (dir / "mut.proof").string() + " --target " + fx("example1.target"));
  CHECK(multi.code == 1);
  CHECK(multi.out.find("ACCEPTED") != std::string::npos);
  CHECK(multi.out.find("REJECTED") != std::string::npos);
}

TEST_CASE("compress exit codes and reports") {
  const fs::path dir = fs::temp_directory_path() / "lpac_cli_test";
  fs::create_directories(dir);
  const RunResult ok =
      run("compress " + fx("example1_flat.proof") + " -o " +
          (dir / "mined.proof").string() + " --axioms " +
          fx("example1.axioms") + " --report " + (dir / "rep.jsonl").string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("hit-rate 0.5") != std::string::npos);
  CHECK(slurp(dir / "rep.jsonl").find("\"fragments\":2") != std::string::npos);

  const RunResult refused = run("compress " + fx("example1.proof") + " -o " +
                                (dir / "again.proof").string());
  CHECK(refused.code == 1);

  const RunResult bad = run("compress /nonexistent.proof -o " +
                            (dir / "x.proof").string());
  CHECK(bad.code == 2);
}

TEST_CASE("gen and stats") {
  const fs::path dir = fs::temp_directory_path() / "lpac_cli_gen";
  fs::remove_all(dir);
  const RunResult gen = run("gen chain --blocks 2 --flavor pattern --out " +
                            dir.string() + " --name two");
  CHECK(gen.code == 0);
  CHECK(fs::exists(dir / "two.proof"));

  const RunResult stats = run("stats " + (dir / "two.proof").string());
  CHECK(stats.code == 0);
  CHECK(stats.out.find("max |S|") != std::string::npos);

  const RunResult parse_err = run("stats " + fx("example1.target"));
  CHECK(parse_err.code == 2);

  const RunResult io_fail =
      run("gen chain --blocks 2 --flavor flat --out /dev/null/nope");
  CHECK(io_fail.code == 2);
  fs::remove_all(dir);
}

TEST_CASE("colored diagnostics toggle") {
  const RunResult plain = run("check " + fx("example1.axioms") + " " +
                              fx("example1.proof"));
  CHECK(plain.out.find("\033[") == std::string::npos);

  const fs::path dir = fs::temp_directory_path() / "lpac_cli_test";
  fs::create_directories(dir);
  const std::string cmd = std::string("LPAC_COLOR=1 ") + LPACHECK_BIN +
                          " check " + fx("example1.axioms") + " " +
                          fx("example1.proof") + " > " +
                          (dir / "color.out").string() + " 2>/dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(dir / "color.out").find("\033[32m") != std::string::npos);
}
