#include "bubblestat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bubblestat/errors.hpp"

namespace bubblestat {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;
}  // namespace

void validate(const WindowConfig& cfg) {
    if (cfg.n < 4) {
        throw ConfigError("window length must be at least 4, got " + std::to_string(cfg.n));
    }
}

WindowDecomposition decompose_window(std::span<const double> window) {
    WindowDecomposition d;
    double sum_pos = 0.0, sum_neg = 0.0;
    for (double r : window) {
        if (r > 0.0) {
            ++d.n_pos;
            sum_pos += r;
        } else {
            ++d.n_neg;
            sum_neg += r;
        }
    }
    if (d.n_pos > 0) d.mean_pos = sum_pos / d.n_pos;
    if (d.n_neg > 0) d.mean_neg = sum_neg / d.n_neg;
    return d;
}

double statistic_u(std::span<const double> window) {
    int pos = 0;
    for (double r : window) pos += indicator_u(r);
    return static_cast<double>(pos) / static_cast<double>(window.size());
}

std::optional<double> statistic_v(std::span<const double> window) {
    const auto d = decompose_window(window);
    if (!d.mean_pos || !d.mean_neg) return std::nullopt;
    return *d.mean_pos + *d.mean_neg;
}

std::optional<double> statistic_c(std::span<const double> window) {
    const auto d = decompose_window(window);
    if (!d.mean_pos || !d.mean_neg) return std::nullopt;
    const double u = static_cast<double>(d.n_pos) / static_cast<double>(window.size());
    return *d.mean_pos * u + *d.mean_neg * (1.0 - u);
}

std::span<const double> window_at(const ReturnSeries& returns, std::size_t t,
                                  const WindowConfig& cfg) {
    validate(cfg);
    const auto lead = static_cast<std::size_t>(cfg.lead());
    const auto trail = static_cast<std::size_t>(cfg.trail());
    if (t < lead || t + trail >= returns.size()) {
        throw WindowBoundsError("window of length " + std::to_string(cfg.n) +
                                " does not fit at index " + std::to_string(t) +
                                " in a series of length " + std::to_string(returns.size()));
    }
    return std::span<const double>(returns.values).subspan(t - lead, cfg.n);
}

WindowDecomposition decompose_window(const ReturnSeries& returns, std::size_t t,
                                     const WindowConfig& cfg) {
    return decompose_window(window_at(returns, t, cfg));
}

double statistic_u(const ReturnSeries& returns, std::size_t t, const WindowConfig& cfg) {
    return statistic_u(window_at(returns, t, cfg));
}

std::optional<double> statistic_v(const ReturnSeries& returns, std::size_t t,
                                  const WindowConfig& cfg) {
    return statistic_v(window_at(returns, t, cfg));
}

std::optional<double> statistic_c(const ReturnSeries& returns, std::size_t t,
                                  const WindowConfig& cfg) {
    return statistic_c(window_at(returns, t, cfg));
}

NullMoments null_moments_u(const WindowConfig& cfg) {
    if (cfg.n < 1) throw ConfigError("window length must be positive");
    return {0.5, 1.0 / (4.0 * cfg.n)};
}

NullMoments null_moments_v(int n_pos, int n_neg, double sigma) {
    if (n_pos < 1 || n_neg < 1) {
        throw ConfigError("null moments of V require non-empty positive and non-positive sets");
    }
    if (!(sigma > 0.0)) throw ConfigError("sigma must be positive");
    const double variance =
        (1.0 / n_pos + 1.0 / n_neg) * ((kPi - 2.0) / kPi) * sigma * sigma;
    return {0.0, variance};
}

NullMoments null_moments_c(const WindowConfig& cfg, int n_pos, int n_neg, double sigma) {
    if (n_pos < 1 || n_neg < 1) {
        throw ConfigError("null moments of C require non-empty positive and non-positive sets");
    }
    if (!(sigma > 0.0)) throw ConfigError("sigma must be positive");
    const double n = cfg.n;
    const double variance =
        ((kPi - 2.0) * (n + 1.0) / (4.0 * kPi * n_pos * n_neg) + 2.0 / (n * kPi)) *
        sigma * sigma;
    return {0.0, variance};
}

const char* to_string(StatisticKind kind) noexcept {
    switch (kind) {
        case StatisticKind::U: return "U";
        case StatisticKind::V: return "V";
        case StatisticKind::C: return "C";
    }
    return "?";
}

std::size_t StatisticSeries::valid_count() const noexcept {
    return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), char{1}));
}

RollingStatistics rolling_statistics(const ReturnSeries& returns, const WindowConfig& cfg,
                                     double sigma) {
    validate(cfg);
    if (!(sigma > 0.0)) throw ConfigError("sigma must be positive");
    const std::size_t len = returns.size();
    if (len < static_cast<std::size_t>(cfg.n)) {
        throw InsufficientDataError("insufficient data: series of length " + std::to_string(len) +
                                    " is shorter than the window n=" + std::to_string(cfg.n));
    }

    RollingStatistics out;
    out.window_n = cfg.n;
    for (auto* s : {&out.u, &out.v, &out.c}) {
        s->dates = returns.dates;
        s->raw.assign(len, kNaN);
        s->normalized.assign(len, kNaN);
        s->valid.assign(len, 0);
    }
    out.u.kind = StatisticKind::U;
    out.v.kind = StatisticKind::V;
    out.c.kind = StatisticKind::C;

    const auto lead = static_cast<std::size_t>(cfg.lead());
    const auto trail = static_cast<std::size_t>(cfg.trail());
    out.edge_invalid = lead + trail;

    const NullMoments mu = null_moments_u(cfg);
    const double sd_u = std::sqrt(mu.variance);

    for (std::size_t t = lead; t + trail < len; ++t) {
        const auto window =
            std::span<const double>(returns.values).subspan(t - lead, cfg.n);
        const auto d = decompose_window(window);

        const double u = static_cast<double>(d.n_pos) / cfg.n;
        out.u.raw[t] = u;
        out.u.normalized[t] = (u - mu.mean) / sd_u;
        out.u.valid[t] = 1;

        if (!d.mean_pos || !d.mean_neg) {
            ++out.degenerate_windows;
            continue;
        }

        const double v = *d.mean_pos + *d.mean_neg;
        const NullMoments mv = null_moments_v(d.n_pos, d.n_neg, sigma);
        out.v.raw[t] = v;
        out.v.normalized[t] = (v - mv.mean) / std::sqrt(mv.variance);
        out.v.valid[t] = 1;

        const double c = *d.mean_pos * u + *d.mean_neg * (1.0 - u);
        const NullMoments mc = null_moments_c(cfg, d.n_pos, d.n_neg, sigma);
        out.c.raw[t] = c;
        out.c.normalized[t] = (c - mc.mean) / std::sqrt(mc.variance);
        out.c.valid[t] = 1;
    }

    return out;
}

}  // namespace bubblestat
