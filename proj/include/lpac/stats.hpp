/*------------------------------------------------------------------------*/
/*! \file stats.hpp
    \brief proof statistics reporting

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#pragma once

#include <cstdint>
#include <string>

#include "lpac/ast.hpp"

namespace lpac {

/// Step counts of a proof document plus run measurements. Counts cover
/// top-level steps; steps inside pattern bodies only show up in
/// max_pattern_body_steps.
struct StatsReport {
  std::uint64_t axiom_count = 0;
  std::uint64_t lincomb_count = 0;
  std::uint64_t ext_count = 0;
  std::uint64_t deletion_count = 0;
  std::uint64_t pattern_new_count = 0;
  std::uint64_t pattern_apply_count = 0;
  std::uint64_t max_pattern_body_steps = 0;
  std::uint64_t file_bytes = 0;
  std::int64_t wall_time_millis = 0;

  std::uint64_t total_steps() const {
    return axiom_count + lincomb_count + ext_count + deletion_count +
           pattern_new_count + pattern_apply_count;
  }
};

/// Adds one top-level step to the counters.
void count_step(StatsReport& stats, const Step& step);

StatsReport collect_stats(const ProofDocument& doc);

/// Peak resident set size in MB, or -1 where the platform does not
/// expose it.
long peak_rss_mb();

/// Two-line fixed-width table (header + one row): Steps, #, Apply,
/// max |S|, File, Mem, Time.
std::string stats_table(const std::string& name, const StatsReport& stats);

}  // namespace lpac
