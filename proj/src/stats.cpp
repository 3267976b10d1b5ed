/*------------------------------------------------------------------------*/
/*! \file stats.cpp
    \brief proof statistics collection and table rendering

  Part of lpacheck
  Copyright(C) 2026 lpacheck developers
*/
/*------------------------------------------------------------------------*/
#include "lpac/stats.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

namespace lpac {

void count_step(StatsReport& stats, const Step& step) {
  struct Counter {
    StatsReport& s;

    void operator()(const AxiomStep&) const { ++s.axiom_count; }
    void operator()(const DeletionStep&) const { ++s.deletion_count; }
    void operator()(const LinCombStep&) const { ++s.lincomb_count; }
    void operator()(const ExtStep&) const { ++s.ext_count; }
    void operator()(const PatternNewStep& p) const {
      ++s.pattern_new_count;
      s.max_pattern_body_steps =
          std::max<std::uint64_t>(s.max_pattern_body_steps, p.body.size());
    }
    void operator()(const PatternApplyStep&) const {
      ++s.pattern_apply_count;
    }
  };
  std::visit(Counter{stats}, step.node);
}

StatsReport collect_stats(const ProofDocument& doc) {
  StatsReport stats;
  for (const auto& step : doc.steps) count_step(stats, step);
  return stats;
}

long peak_rss_mb() {
#if defined(__unix__) || defined(__APPLE__)
  struct rusage usage;
  if (getrusage(RUSAGE_SELF, &usage) == 0) {
#if defined(__APPLE__)
    return static_cast<long>(usage.ru_maxrss / (1024 * 1024));
#else
    return static_cast<long>(usage.ru_maxrss / 1024);  // ru_maxrss is in KB
#endif
  }
#endif
  return -1;
}

std::string stats_table(const std::string& name, const StatsReport& stats) {
  std::ostringstream out;
  const long rss = peak_rss_mb();
  out << std::left << std::setw(20) << "Name" << std::right << std::setw(10)
      << "Steps" << std::setw(6) << "#" << std::setw(8) << "Apply"
      << std::setw(9) << "max |S|" << std::setw(12) << "File" << std::setw(8)
      << "Mem" << std::setw(10) << "Time" << '\n';
  out << std::left << std::setw(20) << name << std::right << std::setw(10)
      << stats.total_steps() << std::setw(6) << stats.pattern_new_count
      << std::setw(8) << stats.pattern_apply_count << std::setw(9)
      << stats.max_pattern_body_steps << std::setw(12) << stats.file_bytes;
  if (rss >= 0)
    out << std::setw(8) << rss;
  else
    out << std::setw(8) << "-";
  out << std::setw(9) << std::fixed << std::setprecision(3)
      << (static_cast<double>(stats.wall_time_millis) / 1000.0) << "s\n";
  return out.str();
}

}  // namespace lpac
