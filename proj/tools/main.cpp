// Command-line front end: parses one subcommand into a RunConfig and hands
// it to dcearma::run(). Exit codes: 0 success, 1 runtime failure, 2 bad
// configuration.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dcearma/errors.hpp"
#include "dcearma/reports.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for ARMA processes with mixed "
                 "discrete-continuous excitation"};
    app.require_subcommand(1);

    dcearma::RunConfig cfg;
    if (const char* env_seed = std::getenv("DCE_ARMA_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "bad DCE_ARMA_SEED value\n";
            return 2;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_flag("--svg", cfg.svg, "also write SVG plots");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model_file, "model spec file");
    };

    auto* simulate = app.add_subcommand("simulate", "sample a path and export CSV");
    add_common(simulate);
    add_model(simulate);
    simulate->add_option("--n", cfg.n, "path length");
    simulate->add_option("--burn-in", cfg.burn_in, "burn-in steps (-1 = auto)");

    auto* rid = app.add_subcommand("rid", "information-dimension slope of the excitation");
    add_common(rid);
    add_model(rid);
    rid->add_option("--m-grid", cfg.m_grid, "dyadic quantization grid");
    rid->add_option("--samples", cfg.samples, "samples per grid point");

    auto* bid = app.add_subcommand("bid", "block dimension bounds and genie estimate");
    add_common(bid);
    add_model(bid);
    bid->add_option("--m-max", cfg.m_max, "largest window in the sweep");
    bid->add_option("--trials", cfg.trials, "Monte Carlo trials per estimate");

    auto* idr = app.add_subcommand("idr", "finite-scale probe of the entropy rate limit");
    add_common(idr);
    add_model(idr);
    idr->add_option("--m", cfg.m, "quantization precision (<= 64)");
    idr->add_option("--n-grid", cfg.n_grid, "joint dimensions (each <= 3)");
    idr->add_option("--samples", cfg.samples, "paths per grid point");

    auto* hist = app.add_subcommand("histogram", "singular-dimension histogram");
    add_common(hist);
    add_model(hist);
    hist->add_option("--n", cfg.n, "window length");
    hist->add_option("--trials", cfg.trials, "Monte Carlo trials");

    auto* conc = app.add_subcommand("concentration", "tail bounds vs empirical tails");
    add_common(conc);
    add_model(conc);
    conc->add_option("--n", cfg.n, "window length");
    conc->add_option("--trials", cfg.trials, "Monte Carlo trials");

    auto* compress = app.add_subcommand("compress", "rate-success curve");
    add_common(compress);
    add_model(compress);
    compress->add_option("--n", cfg.n, "block length");
    compress->add_option("--rates", cfg.rates, "rate grid");
    compress->add_option("--trials", cfg.trials, "trials per rate");
    compress->add_option("--decoder", cfg.decoder, "genie or search:K");
    compress->add_option("--tol", cfg.tol, "success tolerance (relative inf-norm)");

    auto* hankel = app.add_subcommand("hankel", "random column-selection rank histogram");
    add_common(hankel);
    add_model(hankel);
    hankel->add_option("--n", cfg.n, "window length");
    hankel->add_option("--alpha", cfg.alpha, "column selection probability");
    hankel->add_option("--trials", cfg.trials, "Monte Carlo trials");

    auto* cantor = app.add_subcommand("cantor", "Bernoulli convolution CDF");
    add_common(cantor);
    cantor->add_option("--a", cfg.conv_a, "contraction factor in (0,1)");
    cantor->add_option("--depth", cfg.depth, "series truncation depth");
    cantor->add_option("--samples", cfg.samples, "sample count");

    auto* figures = app.add_subcommand("figures", "reproduction recipes");
    add_common(figures);
    figures->add_option("name", cfg.figure, "bid|histogram|cantor|scatter")->required();
    figures->add_option("--n", cfg.n, "window length (histogram/scatter)");
    figures->add_option("--trials", cfg.trials, "Monte Carlo trials");
    figures->add_option("--samples", cfg.samples, "sample count (cantor)");
    figures->add_option("--depth", cfg.depth, "series depth (cantor)");
    figures->add_option("--lag", cfg.lag, "scatter lag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        auto files = dcearma::run(cfg);
        for (const auto& f : files) std::cout << f << "\n";
        return 0;
    } catch (const dcearma::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
