/*------------------------------------------------------------------------*/
/*! \file lpacheck.cpp
    \brief command-line driver: check, compress, gen, stats

  Exit codes are the machine contract: 0 accepted / success, 1 rejected,
  target not found, or refused input, 2 parse or IO error.

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lpac/checker.hpp"
#include "lpac/genbench.hpp"
#include "lpac/miner.hpp"
#include "lpac/parser.hpp"
#include "lpac/serialize.hpp"
#include "lpac/stats.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitError = 2;

bool use_color() {
  const char* env = std::getenv("LPAC_COLOR");
  return env && std::string(env) == "1";
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string red(const std::string& text) { return paint(text, "31"); }
std::string green(const std::string& text) { return paint(text, "32"); }
std::string yellow(const std::string& text) { return paint(text, "33"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t file_bytes(const std::string& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  return ec ? 0 : static_cast<std::uint64_t>(size);
}

void print_machine_line(const lpac::Verdict& verdict) {
  std::string status;
  switch (verdict.status) {
    case lpac::VerdictStatus::Accepted: status = "accepted"; break;
    case lpac::VerdictStatus::Rejected: status = "rejected"; break;
    case lpac::VerdictStatus::TargetNotFound: status = "no-target"; break;
  }
  std::string step = "-";
  std::string line = "-";
  if (verdict.failure) {
    step = verdict.failure->index;
    line = std::to_string(verdict.failure->span.line);
  }
  std::cerr << "STATUS=" << status << " STEP=" << step << " LINE=" << line
            << "\n";
}

int check_one(const lpac::ProofDocument& axioms,
              const std::optional<lpac::Polynomial>& target,
              const std::string& proof_path, const std::string& label,
              bool stats, bool debug, bool machine) {
  // The proof itself is checked on the fly, step by step.
  lpac::CheckOptions options;
  options.debug = debug;
  lpac::Checker checker(target, options);
  const auto start = std::chrono::steady_clock::now();
  try {
    for (const auto& step : axioms.steps)
      if (!checker.feed(step, /*from_axiom_file=*/true)) break;
    const std::string proof_text = read_file(proof_path);
    lpac::ProofReader reader(proof_text);
    while (auto step = reader.next())
      if (!checker.feed(*step)) break;
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitError;
  }
  lpac::Verdict verdict = checker.finish();
  verdict.stats.wall_time_millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count();
  verdict.stats.file_bytes = file_bytes(proof_path);

  for (const auto& warning : verdict.warnings)
    std::cerr << yellow("warning: ") << warning.message << " (line "
              << warning.line << ")\n";
  for (const auto& mismatch : verdict.debug_replay_mismatches)
    std::cerr << yellow("debug replay: ") << mismatch << "\n";

  int code = kExitAccepted;
  if (!label.empty()) std::cout << label << ": ";
  switch (verdict.status) {
    case lpac::VerdictStatus::Accepted:
      std::cout << green("ACCEPTED");
      if (verdict.target_hit)
        std::cout << " target derived at '" << *verdict.target_hit << "'";
      std::cout << "\n";
      break;
    case lpac::VerdictStatus::TargetNotFound:
      std::cout << red("TARGET NOT FOUND")
                << " all steps verified, but the target polynomial was never "
                   "derived\n";
      code = kExitRejected;
      break;
    case lpac::VerdictStatus::Rejected: {
      const auto& f = *verdict.failure;
      std::cout << red("REJECTED") << " step '" << f.index << "' ("
                << lpac::check_error_name(f.kind) << ") at "
                << (f.in_axiom_file ? "axioms" : "proof") << " line "
                << f.span.line << ", step " << f.ordinal << ": " << f.reason
                << "\n";
      code = kExitRejected;
      break;
    }
  }
  if (!verdict.debug_replay_mismatches.empty() && code == kExitAccepted)
    std::cout << yellow("NOTE") << " debug replay reported "
              << verdict.debug_replay_mismatches.size() << " mismatch(es)\n";
  if (stats)
    std::cout << lpac::stats_table(
        std::filesystem::path(proof_path).filename().string(), verdict.stats);
  if (machine) print_machine_line(verdict);
  return code;
}

int cmd_check(const std::string& axioms_path,
              const std::vector<std::string>& proof_paths,
              const std::string& target_path, bool stats, bool debug,
              bool machine) {
  lpac::ProofDocument axioms;
  std::optional<lpac::Polynomial> target;
  try {
    axioms = lpac::parse_axioms(read_file(axioms_path));
    if (!target_path.empty())
      target = lpac::parse_target(read_file(target_path));
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitError;
  }

  // One verdict per proof file; the aggregate exit code is the maximum.
  int code = kExitAccepted;
  for (const auto& path : proof_paths)
    code = std::max(
        code, check_one(axioms, target, path,
                        proof_paths.size() > 1 ? path : std::string(), stats,
                        debug, machine));
  return code;
}

int cmd_compress(const std::string& proof_path, const std::string& out_path,
                 const std::string& axioms_path, int min_repeats, int window,
                 const std::string& mode, const std::string& report_path) {
  lpac::ProofDocument flat;
  std::optional<lpac::ProofDocument> axioms;
  try {
    flat = lpac::parse_proof(read_file(proof_path));
    if (!axioms_path.empty())
      axioms = lpac::parse_axioms(read_file(axioms_path));
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitError;
  }

  lpac::FragmentationConfig config;
  config.min_repeats = min_repeats;
  config.window = window;
  if (mode == "markers")
    config.mode = lpac::FragmentationConfig::Mode::Markers;
  else if (mode == "auto")
    config.mode = lpac::FragmentationConfig::Mode::Automatic;

  lpac::CompressionReport report;
  lpac::ProofDocument compressed;
  try {
    compressed = lpac::compress_proof(flat, config, &report,
                                      axioms ? &*axioms : nullptr);
  } catch (const std::invalid_argument& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitRejected;
  }

  try {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << lpac::serialize(compressed);
    if (!report_path.empty()) {
      std::ofstream rep(report_path, std::ios::binary);
      if (!rep) throw std::runtime_error("cannot write '" + report_path + "'");
      rep << report.to_jsonl();
    }
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitError;
  }

  std::cout << "fragments " << report.fragments << ", hits " << report.hits
            << ", hit-rate " << report.hit_rate << ", patterns "
            << report.patterns_emitted << ", applies "
            << report.applies_emitted << ", steps " << report.steps_in
            << " -> " << report.steps_out << "\n";
  for (const auto& note : report.notes)
    std::cerr << yellow("note: ") << note << "\n";
  return kExitAccepted;
}

int cmd_gen(int blocks, int arity, long seed, const std::string& flavor,
            const std::string& out_dir, std::string name) {
  lpac::ChainSpec spec;
  spec.blocks = blocks;
  spec.block_arity = arity;
  spec.seed = seed;
  const auto chain_flavor = flavor == "pattern" ? lpac::ChainFlavor::Pattern
                                                : lpac::ChainFlavor::Flat;
  if (name.empty())
    name = "chain" + std::to_string(blocks) +
           (chain_flavor == lpac::ChainFlavor::Pattern ? "-pattern" : "-flat");
  try {
    lpac::write_chain(out_dir, name, spec, chain_flavor);
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitError;
  }
  std::cout << "wrote " << name << ".{axioms,target,proof} under " << out_dir
            << "\n";
  return kExitAccepted;
}

int cmd_stats(const std::string& proof_path) {
  try {
    const lpac::ProofDocument doc = lpac::parse_proof(read_file(proof_path));
    lpac::StatsReport stats = lpac::collect_stats(doc);
    stats.file_bytes = file_bytes(proof_path);
    std::cout << lpac::stats_table(
        std::filesystem::path(proof_path).filename().string(), stats);
  } catch (const std::exception& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kExitError;
  }
  return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpacheck - checker and compressor for algebraic proof "
               "certificates with pattern rules"};
  app.require_subcommand(1);

  // check
  std::string axioms_path, target_path;
  std::vector<std::string> proof_paths;
  bool flag_stats = false, flag_debug = false, flag_machine = false;
  auto* check = app.add_subcommand("check", "check proof certificates");
  check->add_option("axioms", axioms_path, "axiom file")->required();
  check->add_option("proof", proof_paths, "proof file(s)")->required();
  check->add_option("--target", target_path, "target polynomial file");
  check->add_flag("--stats", flag_stats, "print a statistics row");
  check->add_flag("--debug", flag_debug,
                  "retain pattern bodies and replay every apply");
  check->add_flag("--machine", flag_machine,
                  "print STATUS=... summary to stderr");

  // compress
  std::string comp_in, comp_out, comp_axioms, comp_mode = "input", comp_report;
  int min_repeats = 2, window = 8;
  auto* compress = app.add_subcommand("compress", "mine repeated fragments");
  compress->add_option("proof", comp_in, "flat proof file")->required();
  compress->add_option("-o,--out", comp_out, "output proof file")->required();
  compress->add_option("--axioms", comp_axioms,
                       "axiom file (resolves operand values)");
  compress->add_option("--min-repeats", min_repeats,
                       "emit patterns for keys seen this often");
  compress->add_option("--window", window,
                       "automatic fragmentation window (steps)");
  compress->add_option("--mode", comp_mode, "input | markers | auto")
      ->check(CLI::IsMember({"input", "markers", "auto"}));
  compress->add_option("--report", comp_report, "JSON-lines report file");

  // gen
  int blocks = 1, arity = 2;
  long seed = 0;
  std::string kind, flavor = "flat", out_dir = ".", name;
  auto* gen = app.add_subcommand("gen", "generate benchmark files");
  gen->add_option("kind", kind, "benchmark family (chain)")
      ->check(CLI::IsMember({"chain"}))
      ->required();
  gen->add_option("--blocks", blocks, "number of blocks")->required();
  gen->add_option("--arity", arity, "axioms per block (default 2)");
  gen->add_option("--seed", seed, "numbering offset");
  gen->add_option("--flavor", flavor, "flat | pattern")
      ->check(CLI::IsMember({"flat", "pattern"}));
  gen->add_option("--out", out_dir, "output directory");
  gen->add_option("--name", name, "file name stem");

  // stats
  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "print proof statistics");
  stats->add_option("proof", stats_path, "proof file")->required();

  CLI11_PARSE(app, argc, argv);

  if (check->parsed())
    return cmd_check(axioms_path, proof_paths, target_path, flag_stats,
                     flag_debug, flag_machine);
  if (compress->parsed())
    return cmd_compress(comp_in, comp_out, comp_axioms, min_repeats, window,
                        comp_mode, comp_report);
  if (gen->parsed())
    return cmd_gen(blocks, arity, seed, flavor, out_dir, name);
  if (stats->parsed()) return cmd_stats(stats_path);
  return kExitError;
}
