#include "bubblestat/io/report_json.hpp"

#include "bubblestat/errors.hpp"
#include "bubblestat/rounding.hpp"

namespace bubblestat {

namespace {

using nlohmann::json;

json periods_to_json(const std::vector<ExceedancePeriod>& periods) {
    json arr = json::array();
    for (const ExceedancePeriod& p : periods) {
        arr.push_back({
            {"start_date", p.start_date.to_string()},
            {"end_date", p.end_date.to_string()},
            {"extremum_z", round_half_even(p.extremum_z, 4)},
            {"p_value", round_half_even(p.p_value, 4)},
            {"direction", to_string(p.direction)},
        });
    }
    return arr;
}

std::vector<ExceedancePeriod> periods_from_json(const json& arr, StatisticKind kind) {
    std::vector<ExceedancePeriod> periods;
    for (const json& item : arr) {
        ExceedancePeriod p;
        p.statistic = kind;
        p.start_date = Date::parse(item.at("start_date").get<std::string>());
        p.end_date = Date::parse(item.at("end_date").get<std::string>());
        p.extremum_z = item.at("extremum_z").get<double>();
        p.p_value = item.at("p_value").get<double>();
        const auto dir = item.at("direction").get<std::string>();
        if (dir != "upper" && dir != "lower") {
            throw ParseError("report: unknown direction '" + dir + "'");
        }
        p.direction = dir == "upper" ? Direction::upper : Direction::lower;
        periods.push_back(p);
    }
    return periods;
}

}  // namespace

json report_to_json(const DetectionReport& report) {
    return json{
        {"schema_version", kReportSchemaVersion},
        {"config",
         {
             {"window_n", report.window_n},
             {"alpha", report.config.alpha},
             {"merge_gap", report.config.merge_gap},
             {"min_run", report.config.min_run},
             {"threshold", report.threshold},
         }},
        {"sigma",
         {
             {"raw_std", report.sigma.raw_std},
             {"kept_count", report.sigma.kept_count},
             {"truncated_std", report.sigma.truncated_std},
             {"k_factor", report.sigma.k_factor},
             {"corrected_sigma", report.sigma.corrected_sigma},
         }},
        {"diagnostics",
         {
             {"returns", report.returns_count},
             {"edge_invalid", report.edge_invalid},
             {"degenerate_windows", report.degenerate_windows},
         }},
        {"periods",
         {
             {"U", periods_to_json(report.u_periods)},
             {"V", periods_to_json(report.v_periods)},
             {"C", periods_to_json(report.c_periods)},
         }},
    };
}

DetectionReport report_from_json(const json& doc) {
    try {
        if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
            throw ParseError("report: unsupported schema version");
        }
        DetectionReport report;
        const json& config = doc.at("config");
        report.window_n = config.at("window_n").get<int>();
        report.config.alpha = config.at("alpha").get<double>();
        report.config.merge_gap = config.at("merge_gap").get<std::size_t>();
        report.config.min_run = config.at("min_run").get<std::size_t>();
        report.threshold = config.at("threshold").get<double>();

        const json& sigma = doc.at("sigma");
        report.sigma.raw_std = sigma.at("raw_std").get<double>();
        report.sigma.kept_count = sigma.at("kept_count").get<std::size_t>();
        report.sigma.truncated_std = sigma.at("truncated_std").get<double>();
        report.sigma.k_factor = sigma.at("k_factor").get<double>();
        report.sigma.corrected_sigma = sigma.at("corrected_sigma").get<double>();

        const json& diag = doc.at("diagnostics");
        report.returns_count = diag.at("returns").get<std::size_t>();
        report.edge_invalid = diag.at("edge_invalid").get<std::size_t>();
        report.degenerate_windows = diag.at("degenerate_windows").get<std::size_t>();

        const json& periods = doc.at("periods");
        report.u_periods = periods_from_json(periods.at("U"), StatisticKind::U);
        report.v_periods = periods_from_json(periods.at("V"), StatisticKind::V);
        report.c_periods = periods_from_json(periods.at("C"), StatisticKind::C);
        return report;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string render_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace bubblestat
