#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

/// Closed-form signal/wavelet generator: an N-dimensional product of per-axis
/// factors, each a Hermite-coefficient mix in the scaled variable s=(t-c)/w
/// times a linear+quadratic phase,
///     amp * (sum_n coef_n h_n(s)) * exp(i*mu*t) * exp(i*rho*t^2),
/// with h_n the orthonormal Hermite functions. All named kinds (gaussian,
/// hermite1, gabor, chirped_gaussian, hermite_superposition) are instances,
/// and the family is closed under the transforms the property checks need
/// (dilation, translation, modulation, extra chirp, conjugation, reflection).
class Generator {
public:
    struct Axis {
        std::vector<cdouble> coeffs; // Hermite coefficients, degree 0..n
        double center = 0.0;
        double width = 1.0;
        double mod_freq = 0.0;
        double chirp_rate = 0.0;
    };

    static Generator gaussian(std::vector<double> center, std::vector<double> width);
    static Generator hermite1(std::vector<double> center, std::vector<double> width);
    static Generator gabor(std::vector<double> center, std::vector<double> width,
                           std::vector<double> mod_freq);
    static Generator chirped_gaussian(std::vector<double> center, std::vector<double> width,
                                      std::vector<double> mod_freq, std::vector<double> chirp_rate);
    /// Seeded random real coefficients over Hermite functions 0..max_order
    /// per axis, normalized to unit coefficient vector.
    static Generator hermite_superposition(std::size_t dims, std::uint64_t seed,
                                           std::size_t max_order = 5);

    Generator(std::string kind, std::vector<Axis> axes, cdouble amplitude = 1.0,
              std::uint64_t seed = 0);

    std::size_t dims() const { return axes_.size(); }
    cdouble operator()(std::span<const double> point) const;

    const std::string& kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<Axis>& axes() const { return axes_; }
    cdouble amplitude() const { return amplitude_; }

    std::string id() const;

    // closed-form transforms (value-preserving identities, see each)
    Generator dilated(double sigma) const;                      // t -> sigma*t
    Generator translated(std::span<const double> y) const;      // t -> t - y
    Generator modulated(std::span<const double> freq) const;    // * exp(i sum nu_k t_k)
    Generator with_chirp(std::span<const double> rates) const;  // * exp(i sum r_k t_k^2)
    Generator conjugated() const;
    Generator reflected() const;                                // t -> -t
    Generator scaled(cdouble factor) const;

    /// Coefficient-level combination r*this + s*other; both generators must
    /// share the same frame (centers, widths, phases) on every axis.
    static Generator linear_combination(cdouble r, const Generator& a, cdouble s, const Generator& b);

private:
    std::string kind_;
    std::vector<Axis> axes_;
    cdouble amplitude_;
    std::uint64_t seed_;
};

/// Pointwise evaluation on a grid.
SampledField sample(const Generator& gen, const Grid& grid);

/// f / ||f||; rejects the zero field.
SampledField normalize(const SampledField& f);

/// Orthonormal Hermite functions h_0..h_n at a point (recurrence).
std::vector<double> hermite_functions(double s, std::size_t max_order);

} // namespace fracwave
