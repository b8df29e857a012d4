#include "bubblestat/io/csv_out.hpp"

#include <ostream>

#include "bubblestat/rounding.hpp"

namespace bubblestat {

namespace {

void put_cell(std::ostream& out, const StatisticSeries& s, std::size_t i) {
    if (s.valid[i]) {
        out << format_compact(s.raw[i]) << ',' << format_compact(s.normalized[i]);
    } else {
        out << ',';
    }
}

}  // namespace

void write_statistics_csv(const RollingStatistics& stats, std::ostream& out) {
    out << "date,U_raw,U_z,V_raw,V_z,C_raw,C_z,U_valid,V_valid,C_valid\n";
    for (std::size_t i = 0; i < stats.u.size(); ++i) {
        out << stats.u.dates[i].to_string() << ',';
        put_cell(out, stats.u, i);
        out << ',';
        put_cell(out, stats.v, i);
        out << ',';
        put_cell(out, stats.c, i);
        out << ',' << int(stats.u.valid[i]) << ',' << int(stats.v.valid[i]) << ','
            << int(stats.c.valid[i]) << '\n';
    }
}

void write_null_draws_csv(const NullSimulation& sim, std::ostream& out) {
    out << "replication,U_raw,U_z,V_raw,V_z,C_raw,C_z,n_pos\n";
    for (std::size_t i = 0; i < sim.u.raw.size(); ++i) {
        out << i << ',' << format_compact(sim.u.raw[i]) << ','
            << format_compact(sim.u.normalized[i]) << ',' << format_compact(sim.v.raw[i]) << ','
            << format_compact(sim.v.normalized[i]) << ',' << format_compact(sim.c.raw[i]) << ','
            << format_compact(sim.c.normalized[i]) << ',' << sim.positive_counts[i] << '\n';
    }
}

void write_null_histogram_csv(const NullSimulation& sim, int bins, std::ostream& out) {
    out << "statistic,center,density\n";
    for (const NullSample* sample : {&sim.u, &sim.v, &sim.c}) {
        const Histogram h = histogram(sample->normalized, bins);
        for (std::size_t b = 0; b < h.centers.size(); ++b) {
            out << to_string(sample->kind) << ',' << format_compact(h.centers[b]) << ','
                << format_compact(h.densities[b]) << '\n';
        }
    }
}

}  // namespace bubblestat
