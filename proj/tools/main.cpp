#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bubblestat/detector.hpp"
#include "bubblestat/errors.hpp"
#include "bubblestat/io/csv_out.hpp"
#include "bubblestat/io/report_json.hpp"
#include "bubblestat/io/svg.hpp"
#include "bubblestat/montecarlo.hpp"
#include "bubblestat/rounding.hpp"
#include "bubblestat/sigma.hpp"
#include "bubblestat/stats.hpp"
#include "bubblestat/synthetic.hpp"
#include "bubblestat/timeseries.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct AnalyzeOptions {
    std::string input;
    int window_n = 100;
    double alpha = 0.05;
    std::size_t merge_gap = 10;
    std::size_t min_run = 1;
    std::string returns_mode = "simple";
    bool drop_zero = false;
    std::string out_dir = ".";
    std::string formats = "json,csv,svg";
};

struct ValidateOptions {
    int window_n = 100;
    int replications = 10000;
    std::uint64_t seed = 20050103;
    int bins = 50;
    std::string out_dir = ".";
};

struct SimulateOptions {
    std::string scenario = "bloom";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_dir = ".";
};

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bubblestat::Error("cannot write " + path.string());
    out << contents;
}

std::set<std::string> parse_formats(const std::string& formats) {
    std::set<std::string> out;
    std::stringstream ss(formats);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item != "json" && item != "csv" && item != "svg") {
            throw bubblestat::ConfigError("unknown format '" + item +
                                          "' (expected json, csv, svg)");
        }
        out.insert(item);
    }
    if (out.empty()) throw bubblestat::ConfigError("--formats must name at least one format");
    return out;
}

bubblestat::BubbleScenario scenario_from_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw bubblestat::Error("cannot open scenario file " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw bubblestat::ParseError("scenario file: " + std::string(e.what()));
    }
    bubblestat::BubbleScenario s;
    try {
        s.length = doc.at("length").get<std::size_t>();
        s.base_sigma = doc.at("base_sigma").get<double>();
        s.seed = doc.value("seed", std::uint64_t{0});
        for (const json& e : doc.value("episodes", json::array())) {
            bubblestat::BubbleEpisode ep;
            ep.start = e.at("start").get<std::size_t>();
            ep.end = e.at("end").get<std::size_t>();
            ep.theta_inv = e.at("theta_inv").get<double>();
            ep.initial_bubble = e.at("initial_bubble").get<double>();
            const auto burst = e.value("burst", std::string("none"));
            const auto mode = bubblestat::burst_mode_from_string(burst);
            if (!mode) throw bubblestat::ParseError("scenario file: unknown burst '" + burst + "'");
            ep.burst = *mode;
            ep.burst_length = e.value("burst_length", std::size_t{0});
            s.episodes.push_back(ep);
        }
    } catch (const json::exception& e) {
        throw bubblestat::ParseError("scenario file: " + std::string(e.what()));
    }
    return s;
}

int run_analyze(const AnalyzeOptions& opt) {
    using namespace bubblestat;
    std::string stage = "configuration";
    try {
        const auto formats = parse_formats(opt.formats);
        if (opt.returns_mode != "simple" && opt.returns_mode != "log") {
            throw ConfigError("--returns must be 'simple' or 'log'");
        }
        const WindowConfig window{opt.window_n};
        validate(window);
        DetectionConfig detection{opt.alpha, opt.merge_gap, opt.min_run};
        validate(detection);
        fs::create_directories(opt.out_dir);

        stage = "load";
        const PriceSeries prices = load_prices_file(opt.input);

        stage = "returns";
        ReturnSeries returns = compute_returns(
            prices, opt.returns_mode == "log" ? ReturnMode::log : ReturnMode::simple);
        if (opt.drop_zero) returns = drop_zero_returns(returns);

        stage = "sigma";
        const SigmaEstimate sigma = estimate_sigma(returns);

        stage = "statistics";
        const RollingStatistics stats = rolling_statistics(returns, window, sigma.corrected_sigma);

        stage = "detection";
        const DetectionReport report = build_report(stats, sigma, detection);

        stage = "output";
        if (formats.count("json")) {
            json doc = report_to_json(report);
            doc["run"] = {
                {"input", opt.input},
                {"return_mode", opt.returns_mode},
                {"drop_zero_returns", opt.drop_zero},
                {"formats", opt.formats},
            };
            write_file(fs::path(opt.out_dir) / "report.json", render_json(doc));
        }
        if (formats.count("csv")) {
            std::ostringstream csv;
            write_statistics_csv(stats, csv);
            write_file(fs::path(opt.out_dir) / "statistics.csv", csv.str());
        }
        if (formats.count("svg")) {
            std::ostringstream svg;
            write_overview_svg(prices, stats, report, svg);
            write_file(fs::path(opt.out_dir) / "overview.svg", svg.str());
        }

        for (const auto* periods : {&report.u_periods, &report.v_periods, &report.c_periods}) {
            const char* name = periods == &report.u_periods   ? "U"
                               : periods == &report.v_periods ? "V"
                                                              : "C";
            std::cout << name << ": " << periods->size() << " exceedance period"
                      << (periods->size() == 1 ? "" : "s");
            for (const ExceedancePeriod& p : *periods) {
                std::cout << "  [" << p.start_date.to_string() << " .. "
                          << p.end_date.to_string() << " z=" << format_fixed(p.extremum_z, 4)
                          << " p=" << format_fixed(p.p_value, 4) << "]";
            }
            std::cout << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << stage << ": " << e.what() << "\n";
        return 1;
    }
}

int run_validate(const ValidateOptions& opt) {
    using namespace bubblestat;
    std::string stage = "configuration";
    try {
        SimulationConfig cfg;
        cfg.window_n = opt.window_n;
        cfg.replications = opt.replications;
        cfg.seed = opt.seed;
        validate(cfg);
        fs::create_directories(opt.out_dir);
        if (opt.replications < 1000) {
            std::cout << "warning: " << opt.replications
                      << " replications give low statistical power; consider 10000\n";
        }

        stage = "simulation";
        const NullSimulation sim = simulate_null(cfg);

        stage = "output";
        {
            std::ostringstream csv;
            write_null_draws_csv(sim, csv);
            write_file(fs::path(opt.out_dir) / "null_draws.csv", csv.str());
        }
        {
            std::ostringstream csv;
            write_null_histogram_csv(sim, opt.bins, csv);
            write_file(fs::path(opt.out_dir) / "null_hist.csv", csv.str());
        }
        {
            std::ostringstream svg;
            write_null_density_svg(sim, opt.bins, svg);
            write_file(fs::path(opt.out_dir) / "fig1.svg", svg.str());
        }

        stage = "checks";
        bool all_ok = true;
        const double ks_crit = ks_critical_1pct(static_cast<std::size_t>(opt.replications));
        auto check = [&](const char* label, bool ok, const std::string& detail) {
            std::cout << (ok ? "[ok]   " : "[FAIL] ") << label << ": " << detail << "\n";
            all_ok = all_ok && ok;
        };
        for (const NullSample* s : {&sim.u, &sim.v, &sim.c}) {
            const char* k = to_string(s->kind);
            const MomentSummary& m = s->summary;
            check((std::string(k) + " mean").c_str(), std::fabs(m.mean) < 0.05,
                  "mean=" + format_fixed(m.mean, 4));
            check((std::string(k) + " variance").c_str(),
                  m.variance > 0.9 && m.variance < 1.1, "var=" + format_fixed(m.variance, 4));
            if (s->kind != StatisticKind::U) {  // U lives on a lattice; moments only
                const double d = ks_statistic_vs_normal(s->normalized);
                check((std::string(k) + " KS vs N(0,1)").c_str(), d < ks_crit,
                      "D=" + format_fixed(d, 4) + " crit=" + format_fixed(ks_crit, 4));
            }
            if (s->kind == StatisticKind::C) {
                check("C skewness", std::fabs(m.skewness) < 0.1,
                      "skew=" + format_fixed(m.skewness, 4));
                check("C excess kurtosis", std::fabs(m.excess_kurtosis) < 0.2,
                      "exkurt=" + format_fixed(m.excess_kurtosis, 4));
            }
        }
        std::cout << "degenerate redraws: " << sim.degenerate_redraws << "\n";
        std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
        return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << stage << ": " << e.what() << "\n";
        return 1;
    }
}

int run_simulate(const SimulateOptions& opt) {
    using namespace bubblestat;
    std::string stage = "configuration";
    try {
        BubbleScenario scenario;
        if (fs::exists(opt.scenario) && fs::is_regular_file(opt.scenario)) {
            scenario = scenario_from_file(opt.scenario);
        } else {
            const auto found = find_scenario(opt.scenario);
            if (!found) {
                std::cerr << "error: unknown scenario '" << opt.scenario << "'; available:";
                for (const NamedScenario& s : scenario_library()) std::cerr << ' ' << s.name;
                std::cerr << "\n";
                return 1;
            }
            scenario = *found;
        }
        if (opt.seed_given) scenario.seed = opt.seed;
        fs::create_directories(opt.out_dir);

        stage = "generation";
        const PriceSeries prices = generate_series(scenario);

        stage = "output";
        std::ostringstream csv;
        write_prices_csv(prices, csv);
        const fs::path path = fs::path(opt.out_dir) / "prices.csv";
        write_file(path, csv.str());
        std::cout << "wrote " << prices.size() << " observations to " << path.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << stage << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asset-price bubble detection from daily closes via sliding-window statistics"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "Detect exceedance periods in a price CSV");
    analyze->add_option("--input", analyze_opt.input, "CSV with date,close columns")->required();
    analyze->add_option("--window", analyze_opt.window_n, "window length")->capture_default_str();
    analyze->add_option("--alpha", analyze_opt.alpha, "two-sided significance level")->capture_default_str();
    analyze->add_option("--merge-gap", analyze_opt.merge_gap,
                        "max sub-threshold gap bridged between runs")->capture_default_str();
    analyze->add_option("--min-run", analyze_opt.min_run,
                        "minimum exceeding observations per period")->capture_default_str();
    analyze->add_option("--returns", analyze_opt.returns_mode, "simple|log")->capture_default_str();
    analyze->add_flag("--drop-zero-returns", analyze_opt.drop_zero,
                      "drop exact-zero returns before analysis");
    analyze->add_option("--out", analyze_opt.out_dir, "output directory")->capture_default_str();
    analyze->add_option("--formats", analyze_opt.formats, "comma list of json,csv,svg")->capture_default_str();

    ValidateOptions validate_opt;
    auto* validate = app.add_subcommand("validate", "Monte Carlo null-distribution checks");
    validate->add_option("--window", validate_opt.window_n, "window length")->capture_default_str();
    validate->add_option("--reps", validate_opt.replications, "replications")->capture_default_str();
    validate->add_option("--seed", validate_opt.seed, "random seed")->capture_default_str();
    validate->add_option("--bins", validate_opt.bins, "histogram bins")->capture_default_str();
    validate->add_option("--out", validate_opt.out_dir, "output directory")->capture_default_str();

    SimulateOptions simulate_opt;
    auto* simulate = app.add_subcommand("simulate", "Generate a synthetic price CSV");
    simulate->add_option("--scenario", simulate_opt.scenario, "library name or JSON file")->capture_default_str();
    auto* seed_opt = simulate->add_option("--seed", simulate_opt.seed, "override scenario seed");
    simulate->add_option("--out", simulate_opt.out_dir, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return run_analyze(analyze_opt);
    if (validate->parsed()) return run_validate(validate_opt);
    simulate_opt.seed_given = seed_opt->count() > 0;
    return run_simulate(simulate_opt);
}
