#pragma once

#include <map>
#include <string>

#include "fracwave/wavelet.hpp"

namespace fracwave {

struct UncertaintyReport {
    std::string inequality;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 1.0;
    bool satisfied = true;
    /// Order-dependent constants used, for audit (P, C, Pprime, D, M2, ...).
    std::map<std::string, double> constants;
};

/// Axis-aligned boxes in the spectral variable; half-open per axis.
struct Box {
    std::vector<double> lo, hi;
};
struct Region {
    std::vector<Box> boxes;
    bool contains(std::span<const double> p) const;
    /// Grid measure: (number of grid points inside) * cell volume.
    double grid_volume(const Grid& g) const;
};

/// Digamma function via upward recurrence and the asymptotic series.
double digamma(double x);

/// Second moment: sum ||t||^2 |f(t)|^2 * prod Delta.
double dispersion2(const SampledField& f);

/// sum ln||t|| |f|^2 * prod Delta, with the origin grid point's ln weight
/// replaced by the cell average of ln||x|| (per-orthant 5-point Gauss
/// sub-quadrature).
double log_moment(const SampledField& f);

/// Cell average of ln||x|| over the origin cell of `grid`.
double origin_cell_log_average(const Grid& grid);

UncertaintyReport heisenberg_mfrft(const SampledField& f, const FracOrder& order);

UncertaintyReport heisenberg_mfrwt(const SampledField& f, const Generator& psi,
                                   const ScaleGrid& scales, const FracOrder& order);

UncertaintyReport log_uncertainty_mfrft(const SampledField& f, const FracOrder& order);

UncertaintyReport log_uncertainty_mfrwt(const SampledField& f, const Generator& psi,
                                        const ScaleGrid& scales, const FracOrder& order);

/// Empirical ratio R for the local inequality; theta != N/2. The existential
/// constant A_theta is estimated by the caller as the sup of R over a signal
/// family; `satisfied` is not asserted here.
UncertaintyReport local_uncertainty(const SampledField& f, const FracOrder& order,
                                    const Region& region, double theta);

UncertaintyReport local_uncertainty_mfrwt(const SampledField& f, const Generator& psi,
                                          const ScaleGrid& scales, const FracOrder& order,
                                          const Region& region, double theta);

} // namespace fracwave
