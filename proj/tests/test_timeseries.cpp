#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "bubblestat/errors.hpp"
#include "bubblestat/rng.hpp"
#include "bubblestat/timeseries.hpp"

using namespace bubblestat;

namespace {

PriceSeries from_closes(std::vector<double> closes) {
    std::vector<Date> dates;
    Date d = Date::parse("2005-01-03");
    for (std::size_t i = 0; i < closes.size(); ++i) {
        dates.push_back(d);
        d = d.next_weekday();
    }
    return make_price_series(std::move(dates), std::move(closes));
}

ReturnSeries from_values(std::vector<double> values) {
    ReturnSeries r;
    Date d = Date::parse("2005-01-03");
    for (std::size_t i = 0; i < values.size(); ++i) {
        r.dates.push_back(d);
        d = d.next_weekday();
    }
    r.values = std::move(values);
    return r;
}

}  // namespace

TEST_SUITE("timeseries") {

TEST_CASE("load_prices accepts minimal valid input") {
    std::istringstream in("date,close\n2005-01-04,100.0\n2005-01-05,101.0\n");
    const PriceSeries p = load_prices(in);
    REQUIRE(p.size() == 2);
    CHECK(p.dates[0] == Date::parse("2005-01-04"));
    CHECK(p.closes[1] == doctest::Approx(101.0));
}

TEST_CASE("load_prices sorts unsorted rows") {
    std::istringstream unsorted("date,close\n2005-01-05,101.0\n2005-01-04,100.0\n");
    std::istringstream sorted("date,close\n2005-01-04,100.0\n2005-01-05,101.0\n");
    const PriceSeries a = load_prices(unsorted);
    const PriceSeries b = load_prices(sorted);
    CHECK(a.dates == b.dates);
    CHECK(a.closes == b.closes);
}

TEST_CASE("load_prices tolerates extra columns, CRLF and a BOM") {
    std::istringstream in(
        "\xEF\xBB\xBF" "Date,Open,Close\r\n2005-01-04,99.0,100.0\r\n2005-01-05,100.5,101.0\r\n");
    const PriceSeries p = load_prices(in);
    REQUIRE(p.size() == 2);
    CHECK(p.closes[0] == doctest::Approx(100.0));
}

TEST_CASE("load_prices rejects bad input") {
    SUBCASE("non-positive close") {
        std::istringstream in("date,close\n2005-01-04,-5\n2005-01-05,1\n");
        CHECK_THROWS_AS((void)load_prices(in), ValidationError);
    }
    SUBCASE("duplicate date") {
        std::istringstream in("date,close\n2005-01-04,1\n2005-01-04,2\n");
        CHECK_THROWS_AS((void)load_prices(in), ValidationError);
    }
    SUBCASE("malformed row reports the line number") {
        std::istringstream in("date,close\n2005-01-04,1\nnot-a-date,2\n");
        try {
            (void)load_prices(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("malformed close") {
        std::istringstream in("date,close\n2005-01-04,1\n2005-01-05,abc\n");
        CHECK_THROWS_AS((void)load_prices(in), ParseError);
    }
    SUBCASE("fewer than two rows") {
        std::istringstream in("date,close\n2005-01-04,1\n");
        CHECK_THROWS_AS((void)load_prices(in), InsufficientDataError);
    }
    SUBCASE("missing header column") {
        std::istringstream in("time,close\n2005-01-04,1\n");
        CHECK_THROWS_AS((void)load_prices(in), ParseError);
    }
}

TEST_CASE("prices csv round-trip") {
    const PriceSeries p = from_closes({100.0, 101.5, 99.25, 103.125});
    std::ostringstream out;
    write_prices_csv(p, out);
    std::istringstream in(out.str());
    const PriceSeries q = load_prices(in);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(q.dates[i] == p.dates[i]);
        CHECK(q.closes[i] == doctest::Approx(p.closes[i]).epsilon(1e-12));
    }
}

TEST_CASE("simple returns") {
    const ReturnSeries r = compute_returns(from_closes({100.0, 110.0}));
    REQUIRE(r.size() == 1);
    CHECK(r.values[0] == doctest::Approx(0.10).epsilon(1e-15));
    CHECK(r.dates[0] == Date::parse("2005-01-04"));  // date of the later price

    const ReturnSeries flat = compute_returns(from_closes({100.0, 100.0, 100.0}));
    CHECK(flat.values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("log returns") {
    const ReturnSeries r = compute_returns(from_closes({100.0, 110.0}), ReturnMode::log);
    REQUIRE(r.size() == 1);
    // ln(1.1), evaluated independently
    CHECK(r.values[0] == doctest::Approx(0.09531017980432486).epsilon(1e-12));
}

TEST_CASE("returns reconstruct the price path") {
    Rng rng(5);
    std::vector<double> closes{250.0};
    for (int i = 0; i < 500; ++i) closes.push_back(closes.back() * std::exp(rng.normal(0.02)));
    const PriceSeries p = from_closes(closes);
    const ReturnSeries r = compute_returns(p);
    double price = p.closes[0];
    for (std::size_t i = 0; i < r.size(); ++i) {
        price *= 1.0 + r.values[i];
        CHECK(price == doctest::Approx(p.closes[i + 1]).epsilon(1e-12));
    }
}

TEST_CASE("drop_zero_returns removes only exact zeros") {
    const ReturnSeries r = from_values({0.01, 0.0, -0.02, 0.0, 0.005});
    const ReturnSeries filtered = drop_zero_returns(r);
    CHECK(filtered.values == std::vector<double>{0.01, -0.02, 0.005});
    CHECK(filtered.dates[1] == r.dates[2]);
}

TEST_CASE("jarque_bera reproduces published index values") {
    // convention check: raw kurtosis, excess inside the statistic
    CHECK(jarque_bera(1930, -0.1771, 6.1827) == doctest::Approx(824.65).epsilon(0.5 / 824.65));
    CHECK(std::fabs(jarque_bera(1930, -0.1771, 6.1827) - 824.65) < 0.5);
    CHECK(std::fabs(jarque_bera(1998, 0.1724, 13.3386) - 8908.3) < 5.0);
}

TEST_CASE("summary_stats on a known sample") {
    // sample {1,2,3,4} has mean 2.5, sample std sqrt(5/3)
    const SummaryStats s = summary_stats(from_values({1.0, 2.0, 3.0, 4.0}));
    CHECK(s.count == 4);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.std_dev == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
    CHECK(s.skewness == doctest::Approx(0.0));
    // m2 = 1.25, m4 = 2.5625 -> raw kurtosis 1.64
    CHECK(s.kurtosis == doctest::Approx(1.64).epsilon(1e-12));
}

TEST_CASE("summary_stats edge cases") {
    CHECK_THROWS_AS((void)summary_stats(from_values({1.0, 2.0, 3.0})), InsufficientDataError);
    CHECK_THROWS_AS((void)summary_stats(from_values({1.0, 1.0, 1.0, 1.0})), DegenerateSeriesError);
}

TEST_CASE("negating the sample flips mean and skewness only") {
    Rng rng(77);
    std::vector<double> xs(4000);
    for (double& x : xs) x = rng.normal(0.01) + 0.002 * rng.uniform();
    std::vector<double> neg(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) neg[i] = -xs[i];

    const SummaryStats a = summary_stats(std::span<const double>(xs));
    const SummaryStats b = summary_stats(std::span<const double>(neg));
    CHECK(b.mean == doctest::Approx(-a.mean).epsilon(1e-12));
    CHECK(b.skewness == doctest::Approx(-a.skewness).epsilon(1e-12));
    CHECK(b.std_dev == doctest::Approx(a.std_dev).epsilon(1e-12));
    CHECK(b.kurtosis == doctest::Approx(a.kurtosis).epsilon(1e-12));
    CHECK(b.jarque_bera == doctest::Approx(a.jarque_bera).epsilon(1e-12));
}

TEST_CASE("JB stays below the 1% critical value on normal samples") {
    int rejections = 0;
    const int seeds = 100;
    for (int seed = 0; seed < seeds; ++seed) {
        Rng rng = Rng::for_replication(314159, static_cast<std::uint64_t>(seed));
        std::vector<double> xs(10000);
        for (double& x : xs) x = rng.normal();
        const SummaryStats s = summary_stats(std::span<const double>(xs));
        CHECK(std::fabs(s.skewness) < 0.2);
        CHECK(s.kurtosis == doctest::Approx(3.0).epsilon(0.15));
        if (s.jb_reject_at_1pct) ++rejections;
    }
    CHECK(rejections <= 5);  // expect ~1% rejections; 95% bound per the contract
}

}  // TEST_SUITE
