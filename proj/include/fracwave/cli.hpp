#pragma once

#include <filesystem>
#include <numbers>

#include "fracwave/io.hpp"

namespace fracwave::cli {

/// Parsed run configuration: defaults are the library's reference
/// configuration (N=1, L=16, M=256, signed scales [1/8,8] x16, hermite-1
/// wavelet, alpha=2*pi/5, lambda=1.2).
struct RunConfig {
    std::string command;
    std::vector<double> alpha{0.4 * std::numbers::pi};
    double lambda = 1.2;
    std::vector<double> half_extents{16.0};
    std::vector<std::size_t> samples{256};
    double a_min = 0.125;
    double a_max = 8.0;
    std::size_t scale_count = 16;
    bool scale_signed = true;
    io::json signal;   // generator descriptor; empty -> hermite1
    io::json wavelet;  // generator descriptor; empty -> hermite1
    std::size_t family_count = 8;
    std::uint64_t seed = 1;
    std::vector<double> thetas;       // empty -> {N/4, N}
    std::vector<double> region_half_widths{1.0};
    std::filesystem::path out_dir = "out";
    int threads = 1;
    std::vector<std::size_t> bench_sizes{64, 128, 256};
    std::vector<std::size_t> bench_dims{1, 2};
    std::size_t bench_reps = 5;

    Grid make_signal_grid() const;
    ScaleGrid make_scales() const;
    FracOrder make_order() const;
    Generator make_signal() const;
    Generator make_wavelet() const;
};

/// Merge a config file (may be empty json) into the defaults.
RunConfig parse_config(const io::json& j, const std::string& command);

/// Execute one subcommand, writing artifacts under cfg.out_dir.
/// Returns the process exit status (0 on success).
int run(const RunConfig& cfg);

} // namespace fracwave::cli
