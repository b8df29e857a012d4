#include "bubblestat/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bubblestat/errors.hpp"
#include "bubblestat/normal.hpp"
#include "bubblestat/rng.hpp"

namespace bubblestat {

void validate(const SimulationConfig& cfg) {
    if (cfg.replications < 100) {
        throw ConfigError("simulation needs at least 100 replications, got " +
                          std::to_string(cfg.replications));
    }
    if (cfg.window_n < 4) {
        throw ConfigError("window length must be at least 4, got " +
                          std::to_string(cfg.window_n));
    }
    if (!(cfg.sigma > 0.0)) throw ConfigError("sigma must be positive");
}

MomentSummary moment_summary(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double x : values) mean += x;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : values) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    const double sum_sq = m2;
    m2 /= n;
    m3 /= n;
    m4 /= n;
    MomentSummary s;
    s.mean = mean;
    s.variance = values.size() > 1 ? sum_sq / (n - 1.0) : 0.0;
    if (m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    }
    return s;
}

NullSimulation simulate_null(const SimulationConfig& cfg) {
    validate(cfg);
    const WindowConfig window{cfg.window_n};
    const NullMoments mu = null_moments_u(window);
    const double sd_u = std::sqrt(mu.variance);

    NullSimulation sim;
    sim.config = cfg;
    sim.u.kind = StatisticKind::U;
    sim.v.kind = StatisticKind::V;
    sim.c.kind = StatisticKind::C;
    for (auto* s : {&sim.u, &sim.v, &sim.c}) {
        s->raw.reserve(cfg.replications);
        s->normalized.reserve(cfg.replications);
    }
    sim.positive_counts.reserve(cfg.replications);

    std::vector<double> draws(static_cast<std::size_t>(cfg.window_n));
    for (int rep = 0; rep < cfg.replications; ++rep) {
        WindowDecomposition d;
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng = Rng::for_replication(cfg.seed, static_cast<std::uint64_t>(rep), attempt);
            for (double& x : draws) x = rng.normal(cfg.sigma);
            d = decompose_window(draws);
            if (d.n_pos > 0 && d.n_neg > 0) break;
            ++sim.degenerate_redraws;  // probability 2^{1-n} per replication
        }

        const double u = statistic_u(draws);
        sim.u.raw.push_back(u);
        sim.u.normalized.push_back((u - mu.mean) / sd_u);

        const double v = *statistic_v(draws);
        const NullMoments mv = null_moments_v(d.n_pos, d.n_neg, cfg.sigma);
        sim.v.raw.push_back(v);
        sim.v.normalized.push_back(v / std::sqrt(mv.variance));

        const double c = *statistic_c(draws);
        const NullMoments mc = null_moments_c(window, d.n_pos, d.n_neg, cfg.sigma);
        sim.c.raw.push_back(c);
        sim.c.normalized.push_back(c / std::sqrt(mc.variance));

        sim.positive_counts.push_back(d.n_pos);
    }

    for (auto* s : {&sim.u, &sim.v, &sim.c}) s->summary = moment_summary(s->normalized);
    return sim;
}

Histogram histogram(std::span<const double> values, int bins) {
    if (bins < 2) throw ConfigError("histogram needs at least 2 bins");
    if (values.empty()) throw ConfigError("histogram of an empty sample");

    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    double lo = *min_it, hi = *max_it;
    if (lo == hi) {  // single-point sample: give it a unit-width support
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / bins;

    Histogram h;
    h.bin_width = width;
    h.centers.resize(static_cast<std::size_t>(bins));
    h.densities.assign(static_cast<std::size_t>(bins), 0.0);
    for (int b = 0; b < bins; ++b) {
        h.centers[static_cast<std::size_t>(b)] = lo + (b + 0.5) * width;
    }
    for (double x : values) {
        auto b = static_cast<std::size_t>((x - lo) / width);
        if (b >= static_cast<std::size_t>(bins)) b = static_cast<std::size_t>(bins) - 1;
        h.densities[b] += 1.0;
    }
    const double norm = 1.0 / (static_cast<double>(values.size()) * width);
    for (double& d : h.densities) d *= norm;
    return h;
}

double ks_statistic_vs_normal(std::span<const double> values) {
    if (values.empty()) throw ConfigError("KS statistic of an empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d_max = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = normal_cdf(sorted[i]);
        const double below = f - static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n - f;
        d_max = std::max({d_max, below, above});
    }
    return d_max;
}

double ks_critical_1pct(std::size_t n) noexcept {
    return 1.63 / std::sqrt(static_cast<double>(n));
}

OracleStatistics brute_force_window_oracle(std::span<const double> window) {
    // Literal evaluation of the defining sums; shares nothing with the
    // stats module implementation.
    const auto n = static_cast<double>(window.size());
    OracleStatistics out;

    double indicator_sum = 0.0;
    for (double r : window) indicator_sum += (r > 0.0) ? 1.0 : 0.0;
    out.u = indicator_sum / n;

    double pos_sum = 0.0;
    int pos_count = 0;
    for (double r : window) {
        if (r > 0.0) {
            pos_sum += r;
            ++pos_count;
        }
    }
    double neg_sum = 0.0;
    int neg_count = 0;
    for (double r : window) {
        if (r <= 0.0) {
            neg_sum += r;
            ++neg_count;
        }
    }
    if (pos_count == 0 || neg_count == 0) return out;

    out.v = pos_sum / pos_count + neg_sum / neg_count;

    double up_fraction = 0.0;
    for (double r : window) up_fraction += (r > 0.0) ? 1.0 : 0.0;
    up_fraction /= n;
    double down_fraction = 0.0;
    for (double r : window) down_fraction += (r > 0.0) ? 0.0 : 1.0;
    down_fraction /= n;
    out.c = (pos_sum / pos_count) * up_fraction + (neg_sum / neg_count) * down_fraction;
    return out;
}

}  // namespace bubblestat
