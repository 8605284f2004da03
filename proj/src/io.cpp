#include "fracwave/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fracwave::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary); // binary: no platform newline translation
    if (!out) fail(errc::io_failure, "cannot open for writing: " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
    if (!out) fail(errc::io_failure, "write failed: " + path.string());
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               std::vector<std::string>* header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open for reading: " + path.string());
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back(); // trailing empty cell
        return cells;
    };
    std::string line;
    std::vector<std::vector<std::string>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            if (header) *header = split(line);
            first = false;
            continue;
        }
        rows.push_back(split(line));
    }
    return rows;
}

json grid_to_json(const Grid& g) {
    return json{{"dims", g.dims()},
                {"half_extents", g.half_extents()},
                {"samples", g.sample_counts()}};
}

Grid grid_from_json(const json& j) {
    return Grid(j.at("half_extents").get<std::vector<double>>(),
                j.at("samples").get<std::vector<std::size_t>>());
}

json order_to_json(const FracOrder& o) {
    return json{{"alpha", o.alpha()}, {"lambda", o.lambda()}};
}

FracOrder order_from_json(const json& j) {
    return FracOrder(j.at("alpha").get<std::vector<double>>(), j.at("lambda").get<double>());
}

json scale_grid_to_json(const ScaleGrid& s) {
    json points = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s.point(i);
        points.push_back(std::vector<double>(p.begin(), p.end()));
    }
    return json{{"dims", s.dims()},  {"a_min", s.a_min()},
                {"a_max", s.a_max()}, {"count", s.count()},
                {"signed", s.is_signed()}, {"points", points}};
}

ScaleGrid scale_grid_from_json(const json& j) {
    return ScaleGrid(j.at("dims").get<std::size_t>(), j.at("a_min").get<double>(),
                     j.at("a_max").get<double>(), j.at("count").get<std::size_t>(),
                     j.at("signed").get<bool>());
}

json generator_to_json(const Generator& g) {
    json j{{"kind", g.kind()}};
    if (g.kind() == "hermite_superposition") {
        j["dims"] = g.dims();
        j["seed"] = g.seed();
        j["max_order"] = g.axes()[0].coeffs.size() - 1;
        return j;
    }
    std::vector<double> center, width, freq, chirp;
    for (const auto& ax : g.axes()) {
        center.push_back(ax.center);
        width.push_back(ax.width);
        freq.push_back(ax.mod_freq);
        chirp.push_back(ax.chirp_rate);
    }
    j["center"] = center;
    j["width"] = width;
    if (g.kind() == "gabor" || g.kind() == "chirped_gaussian") j["mod_freq"] = freq;
    if (g.kind() == "chirped_gaussian") j["chirp_rate"] = chirp;
    return j;
}

Generator generator_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hermite_superposition")
        return Generator::hermite_superposition(j.at("dims").get<std::size_t>(),
                                                j.at("seed").get<std::uint64_t>(),
                                                j.value("max_order", std::size_t{5}));
    if (kind != "gaussian" && kind != "hermite1" && kind != "gabor" &&
        kind != "chirped_gaussian")
        fail(errc::config_invalid, "unknown generator kind: " + kind);
    auto center = j.at("center").get<std::vector<double>>();
    auto width = j.at("width").get<std::vector<double>>();
    if (kind == "gaussian") return Generator::gaussian(center, width);
    if (kind == "hermite1") return Generator::hermite1(center, width);
    if (kind == "gabor")
        return Generator::gabor(center, width, j.at("mod_freq").get<std::vector<double>>());
    if (kind == "chirped_gaussian")
        return Generator::chirped_gaussian(center, width,
                                           j.at("mod_freq").get<std::vector<double>>(),
                                           j.at("chirp_rate").get<std::vector<double>>());
    fail(errc::config_invalid, "unknown generator kind: " + kind);
}

namespace {

json values_to_json(std::span<const cdouble> values) {
    json arr = json::array();
    for (const cdouble& v : values) arr.push_back(json::array({v.real(), v.imag()}));
    return arr;
}

std::vector<cdouble> values_from_json(const json& arr) {
    std::vector<cdouble> out;
    out.reserve(arr.size());
    for (const auto& p : arr) out.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return out;
}

} // namespace

json field_to_json(const SampledField& f) {
    return json{{"header", grid_to_json(f.grid())}, {"values", values_to_json(f.values())}};
}

SampledField field_from_json(const json& j) {
    return SampledField(grid_from_json(j.at("header")), values_from_json(j.at("values")));
}

void write_field_json(const std::filesystem::path& path, const SampledField& f) {
    write_json(path, field_to_json(f));
}

SampledField read_field_json(const std::filesystem::path& path) {
    return field_from_json(read_json(path));
}

json spectrum_to_json(const Spectrum& s) {
    json j = field_to_json(s.field);
    j["order"] = order_to_json(s.order);
    return j;
}

Spectrum spectrum_from_json(const json& j) {
    return Spectrum{field_from_json(j), order_from_json(j.at("order"))};
}

void write_field_csv(const std::filesystem::path& path, const SampledField& f) {
    const Grid& g = f.grid();
    std::vector<std::string> header;
    for (std::size_t k = 0; k < g.dims(); ++k) header.push_back("x" + std::to_string(k));
    header.push_back("re");
    header.push_back("im");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(g.size());
    std::vector<double> pt(g.dims());
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.point(i, pt);
        std::vector<std::string> row;
        for (double v : pt) row.push_back(format_double(v));
        row.push_back(format_double(f[i].real()));
        row.push_back(format_double(f[i].imag()));
        rows.push_back(std::move(row));
    }
    write_csv(path, header, rows);
}

json coefficients_to_json(const WaveletCoefficients& w) {
    return json{{"header",
                 {{"order", order_to_json(w.order)},
                  {"scales", scale_grid_to_json(w.scales)},
                  {"translations", grid_to_json(w.translations)},
                  {"wavelet", w.wavelet_id}}},
                {"values", values_to_json(w.values)}};
}

WaveletCoefficients coefficients_from_json(const json& j) {
    const json& h = j.at("header");
    WaveletCoefficients w{scale_grid_from_json(h.at("scales")),
                          grid_from_json(h.at("translations")),
                          order_from_json(h.at("order")),
                          h.at("wavelet").get<std::string>(),
                          values_from_json(j.at("values"))};
    if (w.values.size() != w.scales.size() * w.translations.size())
        fail(errc::config_invalid, "coefficient array shape mismatch");
    return w;
}

void write_coefficients_csv(const std::filesystem::path& path, const WaveletCoefficients& w) {
    const std::size_t n = w.order.dims();
    std::vector<std::string> header;
    for (std::size_t k = 0; k < n; ++k) header.push_back("a" + std::to_string(k));
    for (std::size_t k = 0; k < n; ++k) header.push_back("b" + std::to_string(k));
    header.push_back("re");
    header.push_back("im");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(w.values.size());
    std::vector<double> b(n);
    for (std::size_t s = 0; s < w.scales.size(); ++s) {
        auto a = w.scales.point(s);
        for (std::size_t j = 0; j < w.translations.size(); ++j) {
            w.translations.point(j, b);
            std::vector<std::string> row;
            for (double v : a) row.push_back(format_double(v));
            for (double v : b) row.push_back(format_double(v));
            cdouble val = w.at(s, j);
            row.push_back(format_double(val.real()));
            row.push_back(format_double(val.imag()));
            rows.push_back(std::move(row));
        }
    }
    write_csv(path, header, rows);
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_failure, "cannot open for writing: " + path.string());
    out << j.dump(2) << "\n";
    if (!out) fail(errc::io_failure, "write failed: " + path.string());
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open for reading: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(errc::config_invalid, "malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

} // namespace fracwave::io
