#include "fracwave/grid.hpp"

#include <cmath>
#include <cstdio>

namespace fracwave {

const char* errc_name(errc code) {
    switch (code) {
        case errc::grid_invalid: return "GRID_INVALID";
        case errc::grid_mismatch: return "GRID_MISMATCH";
        case errc::order_invalid: return "ORDER_INVALID";
        case errc::order_mismatch: return "ORDER_MISMATCH";
        case errc::scale_invalid: return "SCALE_INVALID";
        case errc::zero_field: return "ZERO_FIELD";
        case errc::field_invalid: return "FIELD_INVALID";
        case errc::not_converged: return "NOT_CONVERGED";
        case errc::tail_check_failed: return "TAIL_CHECK_FAILED";
        case errc::theta_invalid: return "THETA_INVALID";
        case errc::region_invalid: return "REGION_INVALID";
        case errc::sigma_invalid: return "SIGMA_INVALID";
        case errc::translation_off_grid: return "TRANSLATION_OFF_GRID";
        case errc::undefined_ratio: return "UNDEFINED_RATIO";
        case errc::config_invalid: return "CONFIG_INVALID";
        case errc::io_failure: return "IO_FAILURE";
        case errc::internal: return "INTERNAL";
    }
    return "INTERNAL";
}

Grid::Grid(std::vector<double> half_extents, std::vector<std::size_t> samples)
    : half_(std::move(half_extents)), samples_(std::move(samples)) {
    if (half_.empty() || half_.size() != samples_.size())
        fail(errc::grid_invalid, "grid needs matching, nonempty half_extents and samples");
    total_ = 1;
    spacing_.resize(half_.size());
    for (std::size_t k = 0; k < half_.size(); ++k) {
        if (!(half_[k] > 0.0))
            fail(errc::grid_invalid, "half extent must be positive");
        if (samples_[k] < 2 || samples_[k] % 2 != 0)
            fail(errc::grid_invalid, "sample count must be even and >= 2");
        spacing_[k] = 2.0 * half_[k] / static_cast<double>(samples_[k]);
        total_ *= samples_[k];
        cell_volume_ *= spacing_[k];
    }
}

Grid Grid::cubic(std::size_t dims, double half_extent, std::size_t samples) {
    return Grid(std::vector<double>(dims, half_extent), std::vector<std::size_t>(dims, samples));
}

void Grid::point(std::size_t flat, std::span<double> out) const {
    for (std::size_t k = dims(); k-- > 0;) {
        std::size_t j = flat % samples_[k];
        flat /= samples_[k];
        out[k] = coord(k, j);
    }
}

std::vector<double> Grid::point(std::size_t flat) const {
    std::vector<double> out(dims());
    point(flat, out);
    return out;
}

void Grid::unflatten(std::size_t flat, std::span<std::size_t> out) const {
    for (std::size_t k = dims(); k-- > 0;) {
        out[k] = flat % samples_[k];
        flat /= samples_[k];
    }
}

std::size_t Grid::flatten(std::span<const std::size_t> idx) const {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims(); ++k)
        flat = flat * samples_[k] + idx[k];
    return flat;
}

bool Grid::same_geometry(const Grid& o, double rtol) const {
    if (samples_ != o.samples_) return false;
    for (std::size_t k = 0; k < dims(); ++k)
        if (std::abs(half_[k] - o.half_[k]) > rtol * std::max(half_[k], o.half_[k]))
            return false;
    return true;
}

SampledField::SampledField(Grid grid, std::vector<cdouble> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        fail(errc::field_invalid, "value count does not match grid point count");
    for (const cdouble& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(errc::field_invalid, "field contains non-finite values");
}

SampledField SampledField::zeros(const Grid& grid) {
    return SampledField(grid, std::vector<cdouble>(grid.size()));
}

cdouble inner_product(const SampledField& f, const SampledField& g) {
    if (!f.grid().same_geometry(g.grid()))
        fail(errc::grid_mismatch, "inner_product requires fields on the same grid");
    cdouble acc = 0.0;
    auto fv = f.values();
    auto gv = g.values();
    for (std::size_t i = 0; i < fv.size(); ++i)
        acc += fv[i] * std::conj(gv[i]);
    return acc * f.grid().cell_volume();
}

double l2_norm(const SampledField& f) {
    cdouble ip = inner_product(f, f);
    if (std::abs(ip.imag()) > 1e-12 * std::max(ip.real(), 1e-300))
        fail(errc::internal, "inner product <f,f> has non-negligible imaginary part");
    return std::sqrt(std::max(ip.real(), 0.0));
}

namespace {

// Geometric magnitudes with cells clipped to [a_min, a_max]: boundaries at the
// geometric midpoints, end cells clipped at the range ends. The per-point
// weight delta_a/a^p is then cell-exact for the 1/a integrand.
struct AxisScales {
    std::vector<double> pts, widths;
};

AxisScales axis_scales(double a_min, double a_max, std::size_t count, bool signed_axes) {
    std::vector<double> mags(count), edges(count + 1);
    const double ratio = std::pow(a_max / a_min, 1.0 / static_cast<double>(count - 1));
    for (std::size_t i = 0; i < count; ++i)
        mags[i] = a_min * std::pow(ratio, static_cast<double>(i));
    mags.back() = a_max;
    edges.front() = a_min;
    edges.back() = a_max;
    for (std::size_t i = 1; i < count; ++i)
        edges[i] = std::sqrt(mags[i - 1] * mags[i]);

    AxisScales out;
    if (signed_axes) {
        for (std::size_t i = count; i-- > 0;) {
            out.pts.push_back(-mags[i]);
            out.widths.push_back(edges[i + 1] - edges[i]);
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        out.pts.push_back(mags[i]);
        out.widths.push_back(edges[i + 1] - edges[i]);
    }
    return out;
}

} // namespace

ScaleGrid::ScaleGrid(std::size_t dims, double a_min, double a_max, std::size_t count, bool signed_axes)
    : dims_(dims), a_min_(a_min), a_max_(a_max), count_(count), signed_(signed_axes) {
    if (dims == 0)
        fail(errc::scale_invalid, "scale grid needs dims >= 1");
    if (!(a_min > 0.0) || !(a_min < a_max))
        fail(errc::scale_invalid, "scale grid needs 0 < a_min < a_max");
    if (count < 2)
        fail(errc::scale_invalid, "scale grid needs count >= 2");

    AxisScales ax = axis_scales(a_min, a_max, count, signed_axes);
    const std::size_t per_axis = ax.pts.size();
    count_total_ = 1;
    for (std::size_t k = 0; k < dims; ++k) count_total_ *= per_axis;

    points_.resize(count_total_ * dims);
    w2_.resize(count_total_);
    w1_.resize(count_total_);
    for (std::size_t i = 0; i < count_total_; ++i) {
        std::size_t rem = i;
        double w2 = 1.0, w1 = 1.0;
        for (std::size_t k = dims; k-- > 0;) {
            std::size_t j = rem % per_axis;
            rem /= per_axis;
            double a = ax.pts[j];
            points_[i * dims + k] = a;
            w2 *= ax.widths[j] / (a * a);
            w1 *= ax.widths[j] / std::abs(a);
        }
        w2_[i] = w2;
        w1_[i] = w1;
    }
}

} // namespace fracwave
