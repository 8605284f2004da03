#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fracwave/error.hpp"

namespace fracwave {

using cdouble = std::complex<double>;

/// Uniform rectangular grid on [-L_k, L_k)^N with M_k even samples per axis.
/// The point along axis k at index j is (j - M_k/2) * spacing_k, so 0 is
/// always a grid point.
class Grid {
public:
    Grid(std::vector<double> half_extents, std::vector<std::size_t> samples);

    /// Cubic grid: same half extent and sample count on every axis.
    static Grid cubic(std::size_t dims, double half_extent, std::size_t samples);

    std::size_t dims() const { return samples_.size(); }
    std::size_t size() const { return total_; }

    double half_extent(std::size_t axis) const { return half_[axis]; }
    std::size_t samples(std::size_t axis) const { return samples_[axis]; }
    double spacing(std::size_t axis) const { return spacing_[axis]; }

    const std::vector<double>& half_extents() const { return half_; }
    const std::vector<std::size_t>& sample_counts() const { return samples_; }

    /// Product of per-axis spacings (Riemann quadrature weight).
    double cell_volume() const { return cell_volume_; }

    double coord(std::size_t axis, std::size_t index) const {
        return (static_cast<double>(index) - static_cast<double>(samples_[axis] / 2)) * spacing_[axis];
    }

    void point(std::size_t flat, std::span<double> out) const;
    std::vector<double> point(std::size_t flat) const;

    /// Decode a flat row-major index into per-axis indices.
    void unflatten(std::size_t flat, std::span<std::size_t> out) const;
    std::size_t flatten(std::span<const std::size_t> idx) const;

    bool operator==(const Grid& o) const {
        return samples_ == o.samples_ && half_ == o.half_;
    }

    /// Geometric equality up to floating rounding of derived spacings.
    bool same_geometry(const Grid& o, double rtol = 1e-12) const;

private:
    std::vector<double> half_;
    std::vector<double> spacing_;
    std::vector<std::size_t> samples_;
    std::size_t total_ = 0;
    double cell_volume_ = 1.0;
};

/// Immutable complex samples of a function on a Grid, row-major axis order.
class SampledField {
public:
    SampledField(Grid grid, std::vector<cdouble> values);

    static SampledField zeros(const Grid& grid);

    const Grid& grid() const { return grid_; }
    std::span<const cdouble> values() const { return values_; }
    const cdouble& operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

private:
    Grid grid_;
    std::vector<cdouble> values_;
};

/// Riemann approximation of the L^2 inner product <f, g>.
cdouble inner_product(const SampledField& f, const SampledField& g);

double l2_norm(const SampledField& f);

/// Discretization of the scale domain R_0^N: per-axis geometric magnitudes
/// a_min..a_max (optionally mirrored across 0), tensored over axes. Carries
/// two quadrature weight sets for the measures da/|a|^2_m and da/|a|_m.
class ScaleGrid {
public:
    ScaleGrid(std::size_t dims, double a_min, double a_max, std::size_t count, bool signed_axes);

    std::size_t dims() const { return dims_; }
    std::size_t size() const { return count_total_; }

    std::span<const double> point(std::size_t i) const {
        return {points_.data() + i * dims_, dims_};
    }
    /// Weight approximating da/|a|^2_m at point i.
    double weight_inv_square(std::size_t i) const { return w2_[i]; }
    /// Weight approximating da/|a|_m at point i.
    double weight_inv_abs(std::size_t i) const { return w1_[i]; }

    double a_min() const { return a_min_; }
    double a_max() const { return a_max_; }
    std::size_t count() const { return count_; }
    bool is_signed() const { return signed_; }

private:
    std::size_t dims_;
    double a_min_, a_max_;
    std::size_t count_;
    bool signed_;
    std::size_t count_total_;
    std::vector<double> points_; // flat, size * dims
    std::vector<double> w2_, w1_;
};

} // namespace fracwave
