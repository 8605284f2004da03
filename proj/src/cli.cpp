#include "fracwave/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>

namespace fracwave::cli {

namespace {

using io::json;

Generator default_wavelet(std::size_t dims) {
    return Generator::hermite1(std::vector<double>(dims, 0.0), std::vector<double>(dims, 1.0));
}

double median_seconds(const std::function<void()>& op, std::size_t reps) {
    op(); // warm
    std::vector<double> t;
    for (std::size_t i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        op();
        auto t1 = std::chrono::steady_clock::now();
        t.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

std::string fmt(double v) { return io::format_double(v); }

std::string constant_or_empty(const UncertaintyReport& r, const char* key) {
    auto it = r.constants.find(key);
    return it == r.constants.end() ? std::string() : fmt(it->second);
}

std::vector<std::string> report_row(const std::string& signal_id, const RunConfig& cfg,
                                    const UncertaintyReport& r, const std::string& theta) {
    std::vector<std::string> row{signal_id, r.inequality};
    for (double a : cfg.alpha) row.push_back(fmt(a));
    row.push_back(fmt(cfg.lambda));
    row.push_back(theta);
    row.push_back(fmt(r.lhs));
    row.push_back(fmt(r.rhs));
    row.push_back(fmt(r.ratio));
    row.push_back(r.satisfied ? "true" : "false");
    row.push_back(constant_or_empty(r, "P"));
    row.push_back(constant_or_empty(r, "C"));
    row.push_back(constant_or_empty(r, "Pprime"));
    row.push_back(constant_or_empty(r, "D"));
    row.push_back(constant_or_empty(r, "M2"));
    return row;
}

int run_frft(const RunConfig& cfg) {
    Grid grid = cfg.make_signal_grid();
    FracOrder order = cfg.make_order();
    SampledField f = sample(cfg.make_signal(), grid);
    Spectrum F = frft_fast(f, order);
    io::write_json(cfg.out_dir / "spectrum.json", io::spectrum_to_json(F));
    io::write_field_csv(cfg.out_dir / "spectrum.csv", F.field);

    SampledField back = ifrft(F, order);
    std::vector<cdouble> diff(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = back[i] - f[i];
    double err = l2_norm(SampledField(grid, std::move(diff))) / std::max(l2_norm(f), 1e-300);
    io::write_json(cfg.out_dir / "report.json",
                   json{{"roundtrip_relative_error", err},
                        {"chirp_sampling_margin", chirp_sampling_margin(grid, order)},
                        {"parseval_residual", parseval_residual(f, f, order)}});
    return 0;
}

int run_wavelet(const RunConfig& cfg) {
    Grid grid = cfg.make_signal_grid();
    FracOrder order = cfg.make_order();
    SampledField f = sample(cfg.make_signal(), grid);
    Generator psi = cfg.make_wavelet();
    ScaleGrid scales = cfg.make_scales();
    WaveletCoefficients W = mfrwt_direct(f, psi, scales, grid, order);
    io::write_json(cfg.out_dir / "coefficients.json", io::coefficients_to_json(W));
    io::write_coefficients_csv(cfg.out_dir / "coefficients.csv", W);
    cdouble ratio = inner_product_relation_check(f, f, psi, scales, grid, order);
    io::write_json(cfg.out_dir / "report.json",
                   json{{"energy_ratio_re", ratio.real()}, {"energy_ratio_im", ratio.imag()}});
    return 0;
}

int run_reconstruct(const RunConfig& cfg) {
    Grid grid = cfg.make_signal_grid();
    FracOrder order = cfg.make_order();
    SampledField f = sample(cfg.make_signal(), grid);
    Generator psi = cfg.make_wavelet();
    ScaleGrid scales = cfg.make_scales();
    WaveletCoefficients W = mfrwt_direct(f, psi, scales, grid, order);
    SampledField rec = reconstruct(W, psi, order);
    io::write_field_json(cfg.out_dir / "reconstruction.json", rec);
    io::write_field_csv(cfg.out_dir / "reconstruction.csv", rec);
    std::vector<cdouble> diff(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = rec[i] - f[i];
    double err = l2_norm(SampledField(grid, std::move(diff))) / std::max(l2_norm(f), 1e-300);
    io::write_json(cfg.out_dir / "report.json", json{{"relative_l2_error", err}});
    return 0;
}

int run_verify(const RunConfig& cfg) {
    Grid grid = cfg.make_signal_grid();
    FracOrder order = cfg.make_order();
    Generator psi = cfg.make_wavelet();
    ScaleGrid scales = cfg.make_scales();
    const std::size_t n = grid.dims();
    std::vector<double> thetas = cfg.thetas;
    if (thetas.empty()) thetas = {static_cast<double>(n) / 4.0, static_cast<double>(n)};

    auto rows_for_signal = [&](std::size_t i) {
        Generator gen = Generator::hermite_superposition(n, cfg.seed + i);
        SampledField f = normalize(sample(gen, grid));
        std::vector<std::vector<std::string>> rows;
        rows.push_back(report_row(gen.id(), cfg, heisenberg_mfrft(f, order), ""));
        rows.push_back(report_row(gen.id(), cfg, log_uncertainty_mfrft(f, order), ""));
        rows.push_back(report_row(gen.id(), cfg, heisenberg_mfrwt(f, psi, scales, order), ""));
        rows.push_back(report_row(gen.id(), cfg, log_uncertainty_mfrwt(f, psi, scales, order), ""));
        for (double theta : thetas) {
            for (double hw : cfg.region_half_widths) {
                Region K{{Box{std::vector<double>(n, -hw), std::vector<double>(n, hw)}}};
                rows.push_back(report_row(gen.id(), cfg, local_uncertainty(f, order, K, theta),
                                          fmt(theta)));
                rows.push_back(report_row(
                    gen.id(), cfg, local_uncertainty_mfrwt(f, psi, scales, order, K, theta),
                    fmt(theta)));
            }
        }
        return rows;
    };

    std::vector<std::vector<std::vector<std::string>>> per_signal(cfg.family_count);
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < cfg.family_count; ++i) per_signal[i] = rows_for_signal(i);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, [&]() {
                for (std::size_t i = next.fetch_add(1); i < cfg.family_count;
                     i = next.fetch_add(1))
                    per_signal[i] = rows_for_signal(i);
            }));
        for (auto& f : futs) f.get();
    }

    std::vector<std::string> header{"signal", "inequality"};
    for (std::size_t k = 0; k < n; ++k) header.push_back("alpha_" + std::to_string(k));
    header.insert(header.end(),
                  {"lambda", "theta", "lhs", "rhs", "ratio", "satisfied", "P", "C", "Pprime", "D",
                   "M2"});
    std::vector<std::vector<std::string>> rows;
    for (auto& sig_rows : per_signal)
        for (auto& r : sig_rows) rows.push_back(std::move(r));
    io::write_csv(cfg.out_dir / "verify.csv", header, rows);

    bool all = true;
    for (const auto& r : rows)
        if (r[7 + n] == "false") all = false; // satisfied column
    io::write_json(cfg.out_dir / "report.json",
                   json{{"rows", rows.size()}, {"all_satisfied", all}});
    return 0;
}

int run_bench(const RunConfig& cfg) {
    std::vector<std::string> header{"dims", "samples", "op", "median_seconds", "reps"};
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n : cfg.bench_dims) {
        FracOrder order(std::vector<double>(n, cfg.alpha[0]), cfg.lambda);
        for (std::size_t m : cfg.bench_sizes) {
            Grid grid = Grid::cubic(n, 10.0, m);
            SampledField f = sample(
                Generator::gaussian(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)),
                grid);
            double fast = median_seconds([&]() { frft_fast(f, order); }, cfg.bench_reps);
            rows.push_back({std::to_string(n), std::to_string(m), "frft_fast", fmt(fast),
                            std::to_string(cfg.bench_reps)});
            double pairs = std::pow(static_cast<double>(grid.size()), 2.0);
            if (pairs <= 1e8) {
                Grid out = induced_spectral_grid(grid, order);
                double direct =
                    median_seconds([&]() { frft_direct(f, order, out); }, cfg.bench_reps);
                rows.push_back({std::to_string(n), std::to_string(m), "frft_direct", fmt(direct),
                                std::to_string(cfg.bench_reps)});
            } else {
                rows.push_back({std::to_string(n), std::to_string(m), "frft_direct", "",
                                std::to_string(cfg.bench_reps)});
            }
        }
    }
    io::write_csv(cfg.out_dir / "bench.csv", header, rows);
    return 0;
}

} // namespace

Grid RunConfig::make_signal_grid() const { return Grid(half_extents, samples); }

ScaleGrid RunConfig::make_scales() const {
    return ScaleGrid(half_extents.size(), a_min, a_max, scale_count, scale_signed);
}

FracOrder RunConfig::make_order() const {
    std::vector<double> a = alpha;
    if (a.size() == 1 && half_extents.size() > 1) a.assign(half_extents.size(), alpha[0]);
    return FracOrder(a, lambda);
}

Generator RunConfig::make_signal() const {
    return signal.is_null() || signal.empty() ? default_wavelet(half_extents.size())
                                              : io::generator_from_json(signal);
}

Generator RunConfig::make_wavelet() const {
    return wavelet.is_null() || wavelet.empty() ? default_wavelet(half_extents.size())
                                                : io::generator_from_json(wavelet);
}

RunConfig parse_config(const json& j, const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    try {
        if (j.contains("order")) {
            cfg.alpha = j["order"].value("alpha", cfg.alpha);
            cfg.lambda = j["order"].value("lambda", cfg.lambda);
        }
        if (j.contains("grid")) {
            cfg.half_extents = j["grid"].value("half_extents", cfg.half_extents);
            cfg.samples = j["grid"].value("samples", cfg.samples);
        }
        if (j.contains("scales")) {
            cfg.a_min = j["scales"].value("a_min", cfg.a_min);
            cfg.a_max = j["scales"].value("a_max", cfg.a_max);
            cfg.scale_count = j["scales"].value("count", cfg.scale_count);
            cfg.scale_signed = j["scales"].value("signed", cfg.scale_signed);
        }
        if (j.contains("signal")) cfg.signal = j["signal"];
        if (j.contains("wavelet")) cfg.wavelet = j["wavelet"];
        if (j.contains("family")) {
            cfg.family_count = j["family"].value("count", cfg.family_count);
            cfg.seed = j["family"].value("seed", cfg.seed);
        }
        if (j.contains("local")) {
            cfg.thetas = j["local"].value("thetas", cfg.thetas);
            cfg.region_half_widths =
                j["local"].value("half_widths", cfg.region_half_widths);
        }
        if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        if (j.contains("bench")) {
            cfg.bench_sizes = j["bench"].value("sizes", cfg.bench_sizes);
            cfg.bench_dims = j["bench"].value("dims", cfg.bench_dims);
            cfg.bench_reps = j["bench"].value("reps", cfg.bench_reps);
        }
    } catch (const json::exception& e) {
        fail(errc::config_invalid, std::string("bad config: ") + e.what());
    }
    if (cfg.half_extents.size() != cfg.samples.size())
        fail(errc::config_invalid, "grid half_extents and samples must have equal length");
    return cfg;
}

int run(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    // constructs validate the numeric config up front with the module errors
    cfg.make_order();
    cfg.make_signal_grid();

    if (cfg.command == "frft") return run_frft(cfg);
    if (cfg.command == "wavelet") return run_wavelet(cfg);
    if (cfg.command == "reconstruct") return run_reconstruct(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "bench") return run_bench(cfg);
    fail(errc::config_invalid, "unknown command: " + cfg.command);
}

} // namespace fracwave::cli
