#pragma once

#include <cstddef>
#include <span>

#include "bubblestat/timeseries.hpp"

namespace bubblestat {

/// Result of the truncated volatility estimation.
struct SigmaEstimate {
    double raw_std = 0.0;          ///< sample std of all returns (divisor L−1)
    std::size_t kept_count = 0;    ///< observations surviving the 3-std cut
    double truncated_std = 0.0;    ///< sample std of survivors
    double k_factor = 0.0;         ///< censored-variance correction K
    double corrected_sigma = 0.0;  ///< truncated_std / sqrt(K)
};

/**
 * @brief Censored-variance correction factor.
 *
 * K = 1 − 6·e^{−9/2} / (√(2π)·(2Φ(3) − 1)), the expected ratio between the
 * variance of a normal sample truncated at 3σ and the true variance.
 * Evaluated from the closed form, ≈ 0.9733369247.
 */
[[nodiscard]] double truncation_factor() noexcept;

/**
 * @brief Robust σ via one pass of 3-std truncation.
 *
 * (1) sample std S of all returns; (2) discard |r − r̄| > 3S;
 * (3) sample std S′ of the survivors; corrected σ = S′ / √K.
 * Requires at least 30 observations and nonzero variance.
 */
[[nodiscard]] SigmaEstimate estimate_sigma(std::span<const double> returns);
[[nodiscard]] SigmaEstimate estimate_sigma(const ReturnSeries& returns);

}  // namespace bubblestat
