#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracwave/uncertainty.hpp"

namespace fracwave::io {

using nlohmann::json;

/// One CSV cell; reals are rendered with 17 significant digits, '.' decimal.
std::string format_double(double v);

/// UTF-8 CSV with a header row.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
/// Parse a CSV produced by write_csv (no quoting/escaping in this schema).
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               std::vector<std::string>* header = nullptr);

json grid_to_json(const Grid& g);
Grid grid_from_json(const json& j);

json order_to_json(const FracOrder& o);
FracOrder order_from_json(const json& j);

json scale_grid_to_json(const ScaleGrid& s);
ScaleGrid scale_grid_from_json(const json& j);

json generator_to_json(const Generator& g);
Generator generator_from_json(const json& j);

/// JSON header (dims, half_extents, samples) + flat (re, im) pairs.
json field_to_json(const SampledField& f);
SampledField field_from_json(const json& j);
void write_field_json(const std::filesystem::path& path, const SampledField& f);
SampledField read_field_json(const std::filesystem::path& path);

/// Field plus an order header.
json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

/// CSV form: one row per grid point, columns coordinates..., re, im.
void write_field_csv(const std::filesystem::path& path, const SampledField& f);

json coefficients_to_json(const WaveletCoefficients& w);
WaveletCoefficients coefficients_from_json(const json& j);
/// CSV form: columns a..., b..., re, im.
void write_coefficients_csv(const std::filesystem::path& path, const WaveletCoefficients& w);

void write_json(const std::filesystem::path& path, const json& j);
json read_json(const std::filesystem::path& path);

} // namespace fracwave::io
