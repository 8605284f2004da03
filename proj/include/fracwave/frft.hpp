#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

/// Order of the fractional transform: per-axis angles alpha_k in
/// (-pi,pi)\{0} and the scalar parameter lambda != 0. Houses the derived
/// per-axis quantities and the kernel normalization constant.
class FracOrder {
public:
    FracOrder(std::vector<double> alpha, double lambda);

    std::size_t dims() const { return alpha_.size(); }
    const std::vector<double>& alpha() const { return alpha_; }
    double alpha(std::size_t k) const { return alpha_[k]; }
    double lambda() const { return lambda_; }

    /// Quadratic chirp rate a(alpha_k) = cot(alpha_k)/2.
    double chirp_rate(std::size_t k) const { return chirp_rate_[k]; }
    double csc(std::size_t k) const { return csc_[k]; }
    double sec(std::size_t k) const { return sec_[k]; }

    /// Per-axis factor sqrt(1 - i*cot(alpha_k)), principal branch.
    cdouble axis_factor(std::size_t k) const { return axis_factor_[k]; }

    /// Kernel normalization constant lambda^N * prod_k axis_factor(k),
    /// multiplied in ascending axis order.
    cdouble front_factor() const { return front_; }

    /// Angles arccot(lambda^2 * cot(alpha_k)) on the branch containing
    /// alpha_k: in (0,pi) for alpha_k > 0, in (-pi,0) for alpha_k < 0.
    const std::vector<double>& alpha_lambda() const { return alpha_lambda_; }

    /// prod_k sqrt(1 - i*cot(alpha_lambda_k)); equals front_factor()/lambda^N
    /// only at lambda = 1. Kept for reporting.
    cdouble modified_axis_product() const;

    double abs_sin_product() const { return abs_sin_; }
    /// M^2 = max_k csc^2(alpha_k).
    double max_csc_squared() const { return max_csc2_; }

    FracOrder negated() const;
    FracOrder with_lambda(double lambda) const { return FracOrder(alpha_, lambda); }

    bool operator==(const FracOrder& o) const {
        return alpha_ == o.alpha_ && lambda_ == o.lambda_;
    }

private:
    std::vector<double> alpha_;
    double lambda_;
    std::vector<double> chirp_rate_, csc_, sec_, alpha_lambda_;
    std::vector<cdouble> axis_factor_;
    cdouble front_;
    double abs_sin_;
    double max_csc2_;
};

/// Spectrum F_{alpha,lambda} f on its output grid, tagged with the order
/// that produced it.
struct Spectrum {
    SampledField field;
    FracOrder order;
};

/// Unit-modulus quadratic-phase factor exp(i*sign*lambda^2 * sum a(alpha_k) x_k^2).
SampledField chirp(const Grid& grid, const FracOrder& order, int sign);

/// Transform kernel at a single (x, xi) pair, evaluated as the per-axis
/// product in ascending axis order.
cdouble eval_kernel(std::span<const double> x, std::span<const double> xi, const FracOrder& order);

/// Output grid induced by the fast path: spacing 2*pi*|sin alpha_k| /
/// (lambda^2 * M_k * Delta_k) per axis, same sample counts.
Grid induced_spectral_grid(const Grid& in, const FracOrder& order);

/// O(M^2)-per-axis quadrature oracle: sum_x f(x) K(x,xi) * prod Delta for
/// every xi in out_grid.
Spectrum frft_direct(const SampledField& f, const FracOrder& order, const Grid& out_grid);

/// Direct quadrature evaluated at arbitrary output points (flat layout,
/// points.size()/dims entries).
std::vector<cdouble> frft_direct_at(const SampledField& f, const FracOrder& order,
                                    std::span<const double> points_flat);

/// Chirp-FFT path on the induced spectral grid. Agrees with frft_direct on
/// the same grid up to rounding.
Spectrum frft_fast(const SampledField& f, const FracOrder& order);

/// Inverse transform: the forward transform of order (-alpha, lambda).
/// Rejects an order that does not match the spectrum's tag.
SampledField ifrft(const Spectrum& spectrum, const FracOrder& order);

/// |<Ff, Fg> - <f, g>| / max(|<f, g>|, 1e-30).
double parseval_residual(const SampledField& f, const SampledField& g, const FracOrder& order);

/// Largest per-axis value of lambda^2 |a(alpha_k)| L_k Delta_k; the chirp is
/// safely sampled when this stays below pi/4.
double chirp_sampling_margin(const Grid& grid, const FracOrder& order);

using WarningHandler = std::function<void(const std::string&)>;
/// Replace the chirp-aliasing warning sink (default writes to stderr).
/// Returns the previous handler.
WarningHandler set_warning_handler(WarningHandler handler);

} // namespace fracwave
