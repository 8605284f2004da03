#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracwave/cli.hpp"

namespace {

void add_common(CLI::App* sub, std::string& config_path, std::string& out_dir,
                std::vector<double>& alpha, double& lambda, long long& seed, int& threads,
                bool& have_lambda, bool& have_seed, bool& have_threads) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--alpha", alpha, "per-axis fractional angles")->delimiter(',');
    sub->add_option("--lambda", lambda, "order parameter lambda")->each([&](std::string) {
        have_lambda = true;
    });
    sub->add_option("--seed", seed, "seed for randomized families")->each([&](std::string) {
        have_seed = true;
    });
    sub->add_option("--threads", threads, "worker threads for sweeps")->each([&](std::string) {
        have_threads = true;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Fourier / wavelet transform toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::vector<double> alpha;
    double lambda = 0.0;
    long long seed = 0;
    int threads = 0;
    bool have_lambda = false, have_seed = false, have_threads = false;

    for (const char* name : {"frft", "wavelet", "reconstruct", "verify", "bench"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, config_path, out_dir, alpha, lambda, seed, threads, have_lambda,
                   have_seed, have_threads);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        fracwave::io::json cfg_json = fracwave::io::json::object();
        if (!config_path.empty()) cfg_json = fracwave::io::read_json(config_path);
        std::string command = app.get_subcommands().front()->get_name();
        fracwave::cli::RunConfig cfg = fracwave::cli::parse_config(cfg_json, command);
        // flags win over the config file
        if (!alpha.empty()) cfg.alpha = alpha;
        if (have_lambda) cfg.lambda = lambda;
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (have_seed) cfg.seed = static_cast<std::uint64_t>(seed);
        if (have_threads) cfg.threads = threads;
        return fracwave::cli::run(cfg);
    } catch (const fracwave::Error& e) {
        fracwave::io::json err{{"error", e.code_name()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        fracwave::io::json err{{"error", "INTERNAL"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
