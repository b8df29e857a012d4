#include "bubblestat/sigma.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bubblestat/errors.hpp"
#include "bubblestat/normal.hpp"

namespace bubblestat {

namespace {

struct MeanStd {
    double mean;
    double std;
};

MeanStd sample_mean_std(std::span<const double> xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

}  // namespace

double truncation_factor() noexcept {
    static const double k = [] {
        const double numerator = 6.0 * std::exp(-4.5);
        const double denominator =
            std::sqrt(2.0 * std::numbers::pi) * (2.0 * normal_cdf(3.0) - 1.0);
        return 1.0 - numerator / denominator;
    }();
    return k;
}

SigmaEstimate estimate_sigma(std::span<const double> returns) {
    if (returns.size() < 30) {
        throw InsufficientDataError("sigma estimation needs at least 30 returns, got " +
                                    std::to_string(returns.size()));
    }

    const auto [mean, raw_std] = sample_mean_std(returns);
    if (!(raw_std > 0.0)) {
        throw DegenerateSeriesError("zero variance: sigma estimation undefined");
    }

    std::vector<double> kept;
    kept.reserve(returns.size());
    const double cutoff = 3.0 * raw_std;
    for (double r : returns) {
        if (std::fabs(r - mean) <= cutoff) kept.push_back(r);
    }
    if (kept.size() < 2) {
        throw EstimationError("truncation removed effectively all observations");
    }

    const double truncated_std = sample_mean_std(kept).std;
    if (!(truncated_std > 0.0)) {
        throw DegenerateSeriesError("zero variance after truncation");
    }

    SigmaEstimate est;
    est.raw_std = raw_std;
    est.kept_count = kept.size();
    est.truncated_std = truncated_std;
    est.k_factor = truncation_factor();
    est.corrected_sigma = truncated_std / std::sqrt(est.k_factor);
    return est;
}

SigmaEstimate estimate_sigma(const ReturnSeries& returns) {
    return estimate_sigma(std::span<const double>(returns.values));
}

}  // namespace bubblestat
