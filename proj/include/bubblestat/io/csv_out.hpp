#pragma once

#include <iosfwd>

#include "bubblestat/montecarlo.hpp"
#include "bubblestat/stats.hpp"

namespace bubblestat {

/// One row per return index: date, raw/z per statistic (empty when invalid),
/// then the three validity flags.
void write_statistics_csv(const RollingStatistics& stats, std::ostream& out);

/// One row per replication: raw and normalized U/V/C plus the realized n⁺.
void write_null_draws_csv(const NullSimulation& sim, std::ostream& out);

/// Long-format histogram of the normalized draws: statistic, center, density.
void write_null_histogram_csv(const NullSimulation& sim, int bins, std::ostream& out);

}  // namespace bubblestat
