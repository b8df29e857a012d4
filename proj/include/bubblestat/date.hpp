#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bubblestat {

/**
 * @brief Calendar date, stored as a day count since 1970-01-01.
 *
 * Supports exactly what price series need: strict ISO-8601 parsing,
 * ordering, day arithmetic and weekday queries. No time zones, no times.
 */
class Date {
public:
    Date() = default;

    /// Construct from civil fields. Throws ValidationError on an impossible date.
    Date(int year, unsigned month, unsigned day);

    /// Parse strict "YYYY-MM-DD". Throws ParseError on any deviation.
    static Date parse(std::string_view iso);

    /// Parse variant that reports failure as an empty optional.
    static std::optional<Date> try_parse(std::string_view iso) noexcept;

    static Date from_serial(std::int64_t days_since_epoch) noexcept;

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] int year() const noexcept;
    [[nodiscard]] unsigned month() const noexcept;
    [[nodiscard]] unsigned day() const noexcept;

    /// Days since 1970-01-01 (negative before the epoch).
    [[nodiscard]] std::int64_t serial() const noexcept { return serial_; }

    /// True for Monday through Friday.
    [[nodiscard]] bool is_weekday() const noexcept;

    /// Next calendar day that is a weekday.
    [[nodiscard]] Date next_weekday() const noexcept;

    [[nodiscard]] Date plus_days(std::int64_t n) const noexcept {
        return from_serial(serial_ + n);
    }

    auto operator<=>(const Date&) const = default;

private:
    std::int64_t serial_ = 0;
};

}  // namespace bubblestat
