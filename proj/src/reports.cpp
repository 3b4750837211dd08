#include "dcearma/reports.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "dcearma/affine.hpp"
#include "dcearma/cantor.hpp"
#include "dcearma/compress.hpp"
#include "dcearma/csv.hpp"
#include "dcearma/dimension.hpp"
#include "dcearma/errors.hpp"
#include "dcearma/hankel.hpp"
#include "dcearma/model_spec.hpp"
#include "dcearma/svg.hpp"
#include "dcearma/toeplitz.hpp"

namespace dcearma {

namespace fs = std::filesystem;

namespace {

std::string out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

ArmaModel require_model(const RunConfig& cfg) {
    if (cfg.model_file.empty()) {
        throw ConfigError("command '" + cfg.command + "' needs --model");
    }
    return load_model_file(cfg.model_file);
}

std::vector<std::string> cmd_simulate(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    RngStream rng = RngStream::substream(cfg.seed, 0);
    SamplePath path = simulate_path(model, cfg.n, cfg.burn_in, rng);
    std::string file = out_path(cfg, "path.csv");
    CsvWriter csv(file, cfg.seed, {"t", "x", "xi", "nu"});
    for (int t = 1; t <= path.n; ++t) {
        auto row = csv.row();
        row << t << path.x[static_cast<std::size_t>(t - 1)];
        if (t >= path.window_start()) {
            row << path.xi_at(t) << (path.nu_at(t) ? 1 : 0);
        } else {
            row << std::string("") << std::string("");
        }
    }
    return {file};
}

std::vector<std::string> cmd_rid(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    std::vector<int> grid = cfg.m_grid;
    if (grid.empty()) grid = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
    auto sampler = sampler_from_distribution(model.excitation);
    RidResult res = estimate_rid(sampler, grid, cfg.samples, cfg.seed);
    std::string file = out_path(cfg, "rid.csv");
    CsvWriter csv(file, cfg.seed, {"m", "entropy_bits", "samples"});
    csv.comment("slope=" + csv_double(res.estimate.slope) +
                " stderr=" + csv_double(res.estimate.stderr_));
    for (const auto& p : res.curve.points) {
        csv.row() << p.m << p.entropy_bits << p.samples;
    }
    std::vector<std::string> files{file};
    if (cfg.svg) {
        SvgSeries s;
        for (const auto& p : res.curve.points) {
            s.points.emplace_back(std::log2(static_cast<double>(p.m)), p.entropy_bits);
        }
        std::string plot = out_path(cfg, "rid.svg");
        write_svg_lines(plot, {s}, "quantized entropy vs log2 m");
        files.push_back(plot);
    }
    return files;
}

std::vector<std::string> cmd_bid(const RunConfig& cfg, bool with_oracle) {
    ArmaModel model = require_model(cfg);
    const double alpha = model.excitation.alpha();
    std::string file = out_path(cfg, "bid.csv");
    CsvWriter csv(file, cfg.seed, {"m", "lower", "upper", "oracle_estimate", "trials"});
    SvgSeries lo_s, up_s, oracle_s;
    lo_s.color = "#1f77b4";
    up_s.color = "#d62728";
    oracle_s.color = "#2ca02c";
    for (int m = 1; m <= cfg.m_max; ++m) {
        BidBounds b = bid_bounds(m, model.p, model.q, alpha);
        auto row = csv.row();
        row << m << b.lower << b.upper;
        bool oracle_here = with_oracle && (m % 10 == 0) && m >= model.p + 1;
        if (oracle_here) {
            double est = estimate_bid_oracle(model, m, cfg.trials, cfg.seed + static_cast<std::uint64_t>(m));
            row << est << cfg.trials;
            oracle_s.points.emplace_back(m, est);
        } else {
            row << std::string("") << std::string("");
        }
        lo_s.points.emplace_back(m, b.lower);
        up_s.points.emplace_back(m, b.upper);
    }
    std::vector<std::string> files{file};
    if (cfg.svg) {
        std::string plot = out_path(cfg, "bid.svg");
        write_svg_lines(plot, {lo_s, up_s, oracle_s}, "average RID bounds vs m");
        files.push_back(plot);
    }
    return files;
}

std::vector<std::string> cmd_idr(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    std::vector<int> grid = cfg.n_grid;
    if (grid.empty()) grid = {1, 2};
    auto points = estimate_idr(model, cfg.m, grid, cfg.samples, cfg.seed);
    std::string file = out_path(cfg, "idr.csv");
    CsvWriter csv(file, cfg.seed, {"n", "m", "normalized_entropy", "samples"});
    for (const auto& p : points) {
        csv.row() << p.n << cfg.m << p.normalized_entropy << p.samples;
    }
    return {file};
}

std::vector<std::string> cmd_histogram(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    IntHistogram hist = empirical_dimension_histogram(model, cfg.n, cfg.trials, cfg.seed);
    std::string file = out_path(cfg, "dimension_histogram.csv");
    CsvWriter csv(file, cfg.seed, {"d_v", "count", "trials", "n", "p", "q", "alpha"});
    for (const auto& [dv, count] : hist.counts) {
        csv.row() << dv << count << static_cast<std::int64_t>(hist.total) << cfg.n << model.p
                  << model.q << model.excitation.alpha();
    }
    std::vector<std::string> files{file};
    if (cfg.svg) {
        std::vector<std::pair<double, double>> bars;
        for (const auto& [dv, count] : hist.counts) {
            bars.emplace_back(static_cast<double>(dv) / cfg.n,
                              static_cast<double>(count) / static_cast<double>(hist.total));
        }
        std::string plot = out_path(cfg, "dimension_histogram.svg");
        write_svg_bars(plot, bars, "normalized singular dimension");
        files.push_back(plot);
    }
    return files;
}

std::vector<std::string> cmd_concentration(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    IntHistogram hist = empirical_dimension_histogram(model, cfg.n, cfg.trials, cfg.seed);
    std::vector<int> ks;
    for (int k = model.p; k <= cfg.n; ++k) ks.push_back(k);
    auto rows = check_concentration(hist, cfg.n, model.p, model.q,
                                    model.excitation.alpha(), ks);
    std::string file = out_path(cfg, "concentration.csv");
    CsvWriter csv(file, cfg.seed, {"k", "regime", "empirical", "bound", "slack", "satisfied"});
    for (const auto& r : rows) {
        const char* regime = r.regime == ConcentrationRegime::Above   ? "above"
                             : r.regime == ConcentrationRegime::Below ? "below"
                                                                      : "void";
        csv.row() << r.k << std::string(regime) << r.empirical << r.bound << r.slack
                  << std::string(r.satisfied ? "1" : "0");
    }
    return {file};
}

std::vector<std::string> cmd_compress(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    std::vector<double> rates = cfg.rates;
    if (rates.empty()) {
        for (int i = 6; i <= 16; ++i) rates.push_back(0.05 * i);
    }
    DecoderMode mode = DecoderMode::Genie;
    int budget = 64;
    if (cfg.decoder.rfind("search", 0) == 0) {
        mode = DecoderMode::PatternSearch;
        auto colon = cfg.decoder.find(':');
        if (colon != std::string::npos) budget = std::stoi(cfg.decoder.substr(colon + 1));
    } else if (cfg.decoder != "genie") {
        throw ConfigError("decoder must be 'genie' or 'search:K'");
    }
    auto results = rate_curve(model, cfg.n, rates, cfg.trials, cfg.seed, mode, cfg.tol, budget);
    std::string file = out_path(cfg, "rate_curve.csv");
    CsvWriter csv(file, cfg.seed,
                  {"n", "rate", "measurements", "trials", "successes", "mean_dv"});
    SvgSeries s;
    for (const auto& r : results) {
        csv.row() << r.config.n << r.config.rate << r.measurement_count << r.config.trials
                  << r.successes << r.mean_dv;
        s.points.emplace_back(r.config.rate,
                              static_cast<double>(r.successes) / r.config.trials);
    }
    std::vector<std::string> files{file};
    if (cfg.svg) {
        std::string plot = out_path(cfg, "rate_curve.svg");
        write_svg_lines(plot, {s}, "recovery success vs rate");
        files.push_back(plot);
    }
    return files;
}

std::vector<std::string> cmd_hankel(const RunConfig& cfg) {
    ArmaModel model = require_model(cfg);
    ToeplitzSet ts = build_toeplitz(model, cfg.n);
    RngStream rng = RngStream::substream(cfg.seed, 0);
    IntHistogram hist = random_column_rank_distribution(ts.theta_mat, cfg.alpha,
                                                        cfg.trials, rng);
    std::string file = out_path(cfg, "rank_histogram.csv");
    CsvWriter csv(file, cfg.seed, {"rank", "count", "trials"});
    for (const auto& [rank, count] : hist.counts) {
        csv.row() << rank << count << static_cast<std::int64_t>(hist.total);
    }
    return {file};
}

std::vector<std::string> cmd_cantor(const RunConfig& cfg) {
    RngStream rng = RngStream::substream(cfg.seed, 0);
    auto samples = sample_bernoulli_convolution(cfg.conv_a, cfg.depth,
                                                static_cast<int>(cfg.samples), rng);
    std::sort(samples.begin(), samples.end());
    std::string file = out_path(cfg, "cantor_cdf.csv");
    CsvWriter csv(file, cfg.seed, {"x", "empirical_cdf", "analytic_cdf"});
    const bool third = std::fabs(cfg.conv_a - 1.0 / 3.0) < 1e-12;
    const std::size_t stride = std::max<std::size_t>(1, samples.size() / 2000);
    for (std::size_t i = 0; i < samples.size(); i += stride) {
        double x = samples[i];
        double emp = static_cast<double>(i + 1) / static_cast<double>(samples.size());
        csv.row() << x << emp << (third ? scaled_cantor_cdf(x) : -1.0);
    }
    std::vector<std::string> files{file};
    if (cfg.svg && third) {
        SvgSeries emp_s, ana_s;
        ana_s.color = "#d62728";
        for (std::size_t i = 0; i < samples.size(); i += stride) {
            double x = samples[i];
            emp_s.points.emplace_back(x, static_cast<double>(i + 1) /
                                             static_cast<double>(samples.size()));
            ana_s.points.emplace_back(x, scaled_cantor_cdf(x));
        }
        std::string plot = out_path(cfg, "cantor_cdf.svg");
        write_svg_lines(plot, {emp_s, ana_s}, "Bernoulli convolution CDF");
        files.push_back(plot);
    }
    return files;
}

std::vector<std::string> cmd_scatter(const RunConfig& cfg, const ArmaModel& model) {
    RngStream rng = RngStream::substream(cfg.seed, 0);
    auto points = joint_scatter(model, cfg.lag, cfg.n, rng);
    std::string file = out_path(cfg, "joint_scatter.csv");
    CsvWriter csv(file, cfg.seed, {"t", "x_t", "x_t_lag", "all_discrete"});
    for (const auto& p : points) {
        csv.row() << p.t << p.x_t << p.x_lag << std::string(p.all_discrete ? "1" : "0");
    }
    return {file};
}

std::vector<std::string> cmd_figures(const RunConfig& cfg) {
    if (cfg.figure == "bid") {
        RunConfig sub = cfg;
        sub.command = "bid";
        fs::create_directories(cfg.out_dir);
        std::string model_file = (fs::path(cfg.out_dir) / "ar2_model.txt").string();
        {
            std::ofstream out(model_file);
            out << model_to_string(figure_model_ar2());
        }
        sub.model_file = model_file;
        sub.trials = std::min(cfg.trials, 2000);
        auto files = cmd_bid(sub, /*with_oracle=*/true);
        files.push_back(model_file);
        return files;
    }
    if (cfg.figure == "histogram") {
        RunConfig sub = cfg;
        sub.command = "histogram";
        fs::create_directories(cfg.out_dir);
        std::string model_file = (fs::path(cfg.out_dir) / "arma23_model.txt").string();
        {
            std::ofstream out(model_file);
            out << model_to_string(figure_model_arma23());
        }
        sub.model_file = model_file;
        auto files = cmd_histogram(sub);
        files.push_back(model_file);
        return files;
    }
    if (cfg.figure == "cantor") {
        return cmd_cantor(cfg);
    }
    if (cfg.figure == "scatter") {
        return cmd_scatter(cfg, figure_model_ar1());
    }
    throw ConfigError("unknown figure '" + cfg.figure +
                      "' (expected bid|histogram|cantor|scatter)");
}

} // namespace

std::vector<ScatterPoint> joint_scatter(const ArmaModel& model, int lag, int count,
                                        RngStream& rng) {
    if (lag < 1) throw std::invalid_argument("joint_scatter: lag must be >= 1");
    if (count < 1) throw std::invalid_argument("joint_scatter: count must be >= 1");
    const int n = count + lag;
    SamplePath path = simulate_path(model, n, rng);
    std::vector<ScatterPoint> out;
    const int t0 = std::max(1, path.window_start() - 1);
    for (int t = t0; t + lag <= n; ++t) {
        ScatterPoint p;
        p.t = t;
        p.x_t = path.x[static_cast<std::size_t>(t - 1)];
        p.x_lag = path.x[static_cast<std::size_t>(t + lag - 1)];
        p.all_discrete = true;
        for (int i = t + 1; i <= t + lag; ++i) {
            if (path.nu_at(i)) p.all_discrete = false;
        }
        out.push_back(p);
    }
    return out;
}

ArmaModel figure_model_ar2() {
    // poles 0.2 and 0.3: z^2 + phi_1 z + phi_2 = (z-0.2)(z-0.3)
    return ArmaModel(2, 0, {-0.5, 0.06}, {}, DceDistribution::bernoulli_gaussian(0.5));
}

ArmaModel figure_model_arma23() {
    // poles 0.4 and 0.5; generic MA part
    return ArmaModel(2, 3, {-0.9, 0.2}, {0.8, -0.5, 0.3},
                     DceDistribution::bernoulli_gaussian(0.6));
}

ArmaModel figure_model_ar1() {
    return ArmaModel(1, 0, {-1.0 / 3.0}, {}, DceDistribution::bernoulli_gaussian(0.5));
}

std::vector<std::string> run(const RunConfig& cfg) {
    if (cfg.command == "simulate") return cmd_simulate(cfg);
    if (cfg.command == "rid") return cmd_rid(cfg);
    if (cfg.command == "bid") return cmd_bid(cfg, /*with_oracle=*/true);
    if (cfg.command == "idr") return cmd_idr(cfg);
    if (cfg.command == "histogram") return cmd_histogram(cfg);
    if (cfg.command == "concentration") return cmd_concentration(cfg);
    if (cfg.command == "compress") return cmd_compress(cfg);
    if (cfg.command == "hankel") return cmd_hankel(cfg);
    if (cfg.command == "cantor") return cmd_cantor(cfg);
    if (cfg.command == "figures") return cmd_figures(cfg);
    throw ConfigError("unknown command '" + cfg.command + "'");
}

} // namespace dcearma
