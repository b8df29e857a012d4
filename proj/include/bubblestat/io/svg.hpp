#pragma once

#include <iosfwd>

#include "bubblestat/detector.hpp"
#include "bubblestat/montecarlo.hpp"
#include "bubblestat/timeseries.hpp"

namespace bubblestat {

/// Three stacked panels: normalized U and V, normalized C, and the price
/// series, with confidence-band rules and shaded exceedance periods.
void write_overview_svg(const PriceSeries& prices, const RollingStatistics& stats,
                        const DetectionReport& report, std::ostream& out);

/// Densities of the normalized null draws with a standard normal overlay.
void write_null_density_svg(const NullSimulation& sim, int bins, std::ostream& out);

}  // namespace bubblestat
