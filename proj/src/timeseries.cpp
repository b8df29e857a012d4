#include "bubblestat/timeseries.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "bubblestat/errors.hpp"

namespace bubblestat {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

PriceSeries make_price_series(std::vector<Date> dates, std::vector<double> closes) {
    if (dates.size() != closes.size()) {
        throw ValidationError("price series: dates and closes differ in length");
    }
    if (dates.size() < 2) {
        throw InsufficientDataError("price series needs at least 2 observations, got " +
                                    std::to_string(dates.size()));
    }

    std::vector<std::size_t> order(dates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return dates[a] < dates[b]; });

    PriceSeries out;
    out.dates.reserve(dates.size());
    out.closes.reserve(closes.size());
    for (std::size_t idx : order) {
        out.dates.push_back(dates[idx]);
        out.closes.push_back(closes[idx]);
    }

    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!(out.closes[i] > 0.0) || !std::isfinite(out.closes[i])) {
            throw ValidationError("non-positive close " + std::to_string(out.closes[i]) +
                                  " on " + out.dates[i].to_string());
        }
        if (i > 0 && out.dates[i] == out.dates[i - 1]) {
            throw ValidationError("duplicate date " + out.dates[i].to_string());
        }
    }
    return out;
}

PriceSeries load_prices(std::istream& source) {
    std::string line;
    std::size_t line_no = 0;

    // Header: locate the date and close columns by name.
    std::size_t date_col = std::string::npos, close_col = std::string::npos;
    while (std::getline(source, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const std::string name = to_lower(fields[i]);
            if (name == "date") date_col = i;
            if (name == "close") close_col = i;
        }
        if (date_col == std::string::npos || close_col == std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": header must name 'date' and 'close' columns");
        }
        break;
    }
    if (date_col == std::string::npos) {
        throw InsufficientDataError("empty CSV input");
    }

    std::vector<Date> dates;
    std::vector<double> closes;
    while (std::getline(source, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() <= std::max(date_col, close_col)) {
            throw ParseError("line " + std::to_string(line_no) + ": expected at least " +
                             std::to_string(std::max(date_col, close_col) + 1) + " columns");
        }
        const auto date = Date::try_parse(fields[date_col]);
        if (!date) {
            throw ParseError("line " + std::to_string(line_no) + ": bad date '" +
                             fields[date_col] + "'");
        }
        double close = 0.0;
        if (!parse_double(fields[close_col], close)) {
            throw ParseError("line " + std::to_string(line_no) + ": bad close '" +
                             fields[close_col] + "'");
        }
        if (!(close > 0.0)) {
            throw ValidationError("line " + std::to_string(line_no) + ": non-positive close " +
                                  fields[close_col]);
        }
        dates.push_back(*date);
        closes.push_back(close);
    }

    return make_price_series(std::move(dates), std::move(closes));
}

PriceSeries load_prices_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return load_prices(in);
}

void write_prices_csv(const PriceSeries& prices, std::ostream& out) {
    out << "date,close\n";
    char buf[64];
    for (std::size_t i = 0; i < prices.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.10f", prices.closes[i]);
        out << prices.dates[i].to_string() << ',' << buf << '\n';
    }
}

ReturnSeries compute_returns(const PriceSeries& prices, ReturnMode mode) {
    if (prices.size() < 2) {
        throw InsufficientDataError("need at least 2 prices to compute returns");
    }
    ReturnSeries out;
    out.dates.reserve(prices.size() - 1);
    out.values.reserve(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        const double prev = prices.closes[i];
        const double next = prices.closes[i + 1];
        const double r = (mode == ReturnMode::simple) ? (next - prev) / prev
                                                      : std::log(next / prev);
        out.dates.push_back(prices.dates[i + 1]);
        out.values.push_back(r);
    }
    return out;
}

ReturnSeries drop_zero_returns(const ReturnSeries& returns) {
    ReturnSeries out;
    out.dates.reserve(returns.size());
    out.values.reserve(returns.size());
    for (std::size_t i = 0; i < returns.size(); ++i) {
        if (returns.values[i] != 0.0) {
            out.dates.push_back(returns.dates[i]);
            out.values.push_back(returns.values[i]);
        }
    }
    return out;
}

double jarque_bera(std::size_t count, double skewness, double kurtosis_raw) noexcept {
    const double excess = kurtosis_raw - 3.0;
    return static_cast<double>(count) / 6.0 * (skewness * skewness + excess * excess / 4.0);
}

SummaryStats summary_stats(std::span<const double> returns) {
    const std::size_t n = returns.size();
    if (n < 4) {
        throw InsufficientDataError("summary statistics need at least 4 returns, got " +
                                    std::to_string(n));
    }

    const double mean = std::accumulate(returns.begin(), returns.end(), 0.0) /
                        static_cast<double>(n);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double r : returns) {
        const double d = r - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    const double sum_sq = m2;
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);

    if (m2 == 0.0) {
        throw DegenerateSeriesError("zero variance: skewness and kurtosis undefined");
    }

    SummaryStats s;
    s.count = n;
    s.mean = mean;
    s.std_dev = std::sqrt(sum_sq / static_cast<double>(n - 1));
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis = m4 / (m2 * m2);
    s.jarque_bera = jarque_bera(n, s.skewness, s.kurtosis);
    s.jb_reject_at_1pct = s.jarque_bera > kJarqueBeraCritical1pct;
    return s;
}

SummaryStats summary_stats(const ReturnSeries& returns) {
    return summary_stats(std::span<const double>(returns.values));
}

}  // namespace bubblestat
