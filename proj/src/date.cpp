#include "bubblestat/date.hpp"

#include <cctype>
#include <charconv>
#include <chrono>

#include "bubblestat/errors.hpp"

namespace bubblestat {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(std::int64_t serial) noexcept {
    return chr::year_month_day{chr::sys_days{chr::days{serial}}};
}

std::int64_t to_serial(chr::year_month_day ymd) noexcept {
    return chr::sys_days{ymd}.time_since_epoch().count();
}

bool parse_uint(std::string_view text, unsigned& out) noexcept {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day) {
    const chr::year_month_day ymd{chr::year{year}, chr::month{month}, chr::day{day}};
    if (!ymd.ok()) {
        throw ValidationError("invalid calendar date: " + std::to_string(year) + "-" +
                              std::to_string(month) + "-" + std::to_string(day));
    }
    serial_ = to_serial(ymd);
}

std::optional<Date> Date::try_parse(std::string_view iso) noexcept {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
    unsigned y = 0, m = 0, d = 0;
    if (!parse_uint(iso.substr(0, 4), y) || !parse_uint(iso.substr(5, 2), m) ||
        !parse_uint(iso.substr(8, 2), d)) {
        return std::nullopt;
    }
    const chr::year_month_day ymd{chr::year{static_cast<int>(y)}, chr::month{m}, chr::day{d}};
    if (!ymd.ok()) return std::nullopt;
    Date date;
    date.serial_ = to_serial(ymd);
    return date;
}

Date Date::parse(std::string_view iso) {
    if (auto d = try_parse(iso)) return *d;
    throw ParseError("invalid date (expected YYYY-MM-DD): '" + std::string(iso) + "'");
}

Date Date::from_serial(std::int64_t days_since_epoch) noexcept {
    Date d;
    d.serial_ = days_since_epoch;
    return d;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year(), month(), day());
    return buf;
}

int Date::year() const noexcept { return static_cast<int>(to_ymd(serial_).year()); }
unsigned Date::month() const noexcept { return static_cast<unsigned>(to_ymd(serial_).month()); }
unsigned Date::day() const noexcept { return static_cast<unsigned>(to_ymd(serial_).day()); }

bool Date::is_weekday() const noexcept {
    const chr::weekday wd{chr::sys_days{chr::days{serial_}}};
    return wd != chr::Saturday && wd != chr::Sunday;
}

Date Date::next_weekday() const noexcept {
    Date d = plus_days(1);
    while (!d.is_weekday()) d = d.plus_days(1);
    return d;
}

}  // namespace bubblestat
