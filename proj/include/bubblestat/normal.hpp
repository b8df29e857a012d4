#pragma once

namespace bubblestat {

/// Standard normal density φ(x).
[[nodiscard]] double normal_pdf(double x) noexcept;

/// Standard normal CDF Φ(x), absolute error below 1e-15.
[[nodiscard]] double normal_cdf(double x) noexcept;

/// Upper tail 1 − Φ(x), computed without cancellation for large x.
[[nodiscard]] double normal_cdf_complement(double x) noexcept;

/**
 * @brief Inverse standard normal CDF Φ⁻¹(p).
 *
 * Wichura's rational approximation (algorithm AS 241, PPND16 variant),
 * accurate to roughly 1e-15 over the full open interval. Throws
 * ConfigError unless 0 < p < 1.
 */
[[nodiscard]] double normal_quantile(double p);

}  // namespace bubblestat
