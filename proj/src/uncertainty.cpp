#include "fracwave/uncertainty.hpp"

#include <cmath>
#include <numbers>

namespace fracwave {

namespace {

const double kPi = std::numbers::pi;

// boundary-shell energy fraction: points with any index in {0, M-1}
double boundary_shell_fraction(const SampledField& f) {
    const Grid& g = f.grid();
    std::vector<std::size_t> idx(g.dims());
    double shell = 0.0, total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx);
        double e = std::norm(f[i]);
        total += e;
        for (std::size_t k = 0; k < g.dims(); ++k)
            if (idx[k] == 0 || idx[k] + 1 == g.samples(k)) {
                shell += e;
                break;
            }
    }
    return total > 0.0 ? shell / total : 0.0;
}

void require_tail(const SampledField& f, const char* what) {
    if (boundary_shell_fraction(f) >= 1e-6)
        fail(errc::tail_check_failed,
             std::string(what) + ": boundary-shell energy exceeds 1e-6 of the total");
}

double norm2(const SampledField& f) {
    double n = l2_norm(f);
    return n * n;
}

// ||t||^(2*theta) moment
double power_moment(const SampledField& f, double two_theta) {
    const Grid& g = f.grid();
    std::vector<double> pt(g.dims());
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.point(i, pt);
        double r2 = 0.0;
        for (double v : pt) r2 += v * v;
        acc += std::pow(r2, 0.5 * two_theta) * std::norm(f[i]);
    }
    return acc * g.cell_volume();
}

struct OrderConstants {
    double P, Pprime, M2, abs_sin, front2;
};

OrderConstants order_constants(const FracOrder& order) {
    OrderConstants c;
    const double n = static_cast<double>(order.dims());
    c.M2 = order.max_csc_squared();
    c.abs_sin = order.abs_sin_product();
    c.front2 = std::norm(order.front_factor());
    const double l2 = order.lambda() * order.lambda();
    c.P = c.front2 * c.abs_sin / (c.M2 * std::pow(l2, n + 2.0));
    c.Pprime = std::pow(l2, n) / (c.front2 * c.abs_sin);
    return c;
}

// sum over scales and translations of phi(||b||) |W(a,b)|^2 db da/|a|^2
template <typename Weight>
double wavelet_b_moment(const WaveletCoefficients& W, Weight&& weight_of_point) {
    const Grid& g = W.translations;
    const std::size_t nb = g.size();
    std::vector<double> wb(nb);
    std::vector<double> pt(g.dims());
    for (std::size_t j = 0; j < nb; ++j) {
        g.point(j, pt);
        wb[j] = weight_of_point(pt, j);
    }
    double acc = 0.0;
    for (std::size_t s = 0; s < W.scales.size(); ++s) {
        double row = 0.0;
        for (std::size_t j = 0; j < nb; ++j)
            row += wb[j] * std::norm(W.values[s * nb + j]);
        acc += row * g.cell_volume() * W.scales.weight_inv_square(s);
    }
    return acc;
}

double checked_admissibility(const Generator& psi, const FracOrder& order, const Grid& grid) {
    AdmissibilityReport rep = admissibility_auto(psi, order, grid);
    if (!rep.converged || rep.diverging)
        fail(errc::not_converged, "admissibility constant did not converge for this wavelet/order");
    return rep.constant;
}

} // namespace

double digamma(double x) {
    if (!(x > 0.0))
        fail(errc::config_invalid, "digamma implemented for positive arguments");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // asymptotic series, Bernoulli coefficients
    double series = inv2 * (1.0 / 12.0 +
                    inv2 * (-1.0 / 120.0 +
                    inv2 * (1.0 / 252.0 +
                    inv2 * (-1.0 / 240.0 +
                    inv2 * (1.0 / 132.0 +
                    inv2 * (-691.0 / 32760.0 +
                    inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 / x - series;
}

bool Region::contains(std::span<const double> p) const {
    for (const Box& box : boxes) {
        bool in = true;
        for (std::size_t k = 0; k < box.lo.size(); ++k)
            if (!(p[k] >= box.lo[k] && p[k] < box.hi[k])) {
                in = false;
                break;
            }
        if (in) return true;
    }
    return false;
}

double Region::grid_volume(const Grid& g) const {
    std::vector<double> pt(g.dims());
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.point(i, pt);
        if (contains(pt)) ++count;
    }
    return static_cast<double>(count) * g.cell_volume();
}

double dispersion2(const SampledField& f) {
    return power_moment(f, 2.0);
}

double origin_cell_log_average(const Grid& grid) {
    static const double nodes[5] = {-0.906179845938664, -0.538469310105683, 0.0,
                                    0.538469310105683, 0.906179845938664};
    static const double weights[5] = {0.236926885056189, 0.478628670499366, 0.568888888888889,
                                      0.478628670499366, 0.236926885056189};
    const std::size_t n = grid.dims();
    // one orthant [0, Delta_k/2]^N of the origin cell, tensor 5-point Gauss;
    // by symmetry of ln||x|| all 2^N orthants contribute equally
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 5;
    double acc = 0.0;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i;
        double w = 1.0;
        double r2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t j = rem % 5;
            rem /= 5;
            const double h = grid.spacing(k) / 2.0; // orthant edge length
            x[k] = 0.5 * h * (nodes[j] + 1.0);
            w *= weights[j] * 0.5; // weight on [0,1], scaled below by volume ratio
            r2 += x[k] * x[k];
        }
        acc += w * 0.5 * std::log(r2);
    }
    return acc; // average over the orthant == average over the cell
}

double log_moment(const SampledField& f) {
    const Grid& g = f.grid();
    std::vector<double> pt(g.dims());
    std::vector<std::size_t> origin_idx(g.dims());
    for (std::size_t k = 0; k < g.dims(); ++k) origin_idx[k] = g.samples(k) / 2;
    const std::size_t origin_flat = g.flatten(origin_idx);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double w;
        if (i == origin_flat) {
            w = origin_cell_log_average(g);
        } else {
            g.point(i, pt);
            double r2 = 0.0;
            for (double v : pt) r2 += v * v;
            w = 0.5 * std::log(r2);
        }
        acc += w * std::norm(f[i]);
    }
    return acc * g.cell_volume();
}

UncertaintyReport heisenberg_mfrft(const SampledField& f, const FracOrder& order) {
    const double n = static_cast<double>(order.dims());
    OrderConstants oc = order_constants(order);
    Spectrum F = frft_fast(f, order);
    require_tail(F.field, "heisenberg_mfrft spectral dispersion");

    UncertaintyReport rep;
    rep.inequality = "heisenberg_mfrft";
    const double nf2 = norm2(f);
    rep.lhs = dispersion2(f) * dispersion2(F.field);
    rep.rhs = oc.P * (n * n / 4.0) * nf2 * nf2;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : (rep.lhs == 0.0 ? 1.0 : HUGE_VAL);
    rep.satisfied = rep.lhs >= rep.rhs * (1.0 - 1e-9);
    rep.constants = {{"P", oc.P}, {"M2", oc.M2}, {"norm2", nf2}};
    return rep;
}

UncertaintyReport heisenberg_mfrwt(const SampledField& f, const Generator& psi,
                                   const ScaleGrid& scales, const FracOrder& order) {
    const double n = static_cast<double>(order.dims());
    OrderConstants oc = order_constants(order);
    const double C = checked_admissibility(psi, order, f.grid());
    Spectrum F = frft_fast(f, order);
    require_tail(F.field, "heisenberg_mfrwt spectral dispersion");

    WaveletCoefficients W = mfrwt_direct(f, psi, scales, f.grid(), order);
    double b_disp = wavelet_b_moment(W, [](std::span<const double> pt, std::size_t) {
        double r2 = 0.0;
        for (double v : pt) r2 += v * v;
        return r2;
    });

    UncertaintyReport rep;
    rep.inequality = "heisenberg_mfrwt";
    const double nf2 = norm2(f);
    rep.lhs = b_disp * dispersion2(F.field);
    // rhs per the proof's final display (||f||^4); the theorem statement's
    // ||f||^2 variant is recorded alongside
    rep.rhs = oc.P * C * (n * n / 4.0) * nf2 * nf2;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : (rep.lhs == 0.0 ? 1.0 : HUGE_VAL);
    rep.satisfied = rep.lhs >= rep.rhs * (1.0 - 1e-9);
    rep.constants = {{"P", oc.P},
                     {"C", C},
                     {"M2", oc.M2},
                     {"norm2", nf2},
                     {"rhs_norm2_variant", oc.P * C * (n * n / 4.0) * nf2}};
    return rep;
}

UncertaintyReport log_uncertainty_mfrft(const SampledField& f, const FracOrder& order) {
    const double n = static_cast<double>(order.dims());
    OrderConstants oc = order_constants(order);
    require_tail(f, "log_uncertainty_mfrft signal moment");
    Spectrum F = frft_fast(f, order);
    require_tail(F.field, "log_uncertainty_mfrft spectral moment");

    const double D = digamma(n / 4.0) - std::log(2.0);
    const double Mfac = std::sqrt(oc.M2);
    UncertaintyReport rep;
    rep.inequality = "log_mfrft";
    const double nf2 = norm2(f);
    rep.lhs = log_moment(f) + oc.Pprime * log_moment(F.field);
    rep.rhs = (D - oc.Pprime * std::log(order.lambda() * order.lambda() * Mfac)) * nf2;
    rep.ratio = rep.rhs != 0.0 ? rep.lhs / rep.rhs : 1.0;
    rep.satisfied = rep.lhs >= rep.rhs - 1e-9 * std::abs(rep.rhs);
    rep.constants = {{"Pprime", oc.Pprime}, {"D", D}, {"M2", oc.M2}, {"norm2", nf2}};
    return rep;
}

UncertaintyReport log_uncertainty_mfrwt(const SampledField& f, const Generator& psi,
                                        const ScaleGrid& scales, const FracOrder& order) {
    const double n = static_cast<double>(order.dims());
    OrderConstants oc = order_constants(order);
    const double C = checked_admissibility(psi, order, f.grid());
    require_tail(f, "log_uncertainty_mfrwt signal moment");
    Spectrum F = frft_fast(f, order);
    require_tail(F.field, "log_uncertainty_mfrwt spectral moment");

    WaveletCoefficients W = mfrwt_direct(f, psi, scales, f.grid(), order);
    const double origin_avg = origin_cell_log_average(f.grid());
    std::vector<std::size_t> oi(f.grid().dims());
    for (std::size_t k = 0; k < f.grid().dims(); ++k) oi[k] = f.grid().samples(k) / 2;
    const std::size_t origin_flat = f.grid().flatten(oi);
    double b_log = wavelet_b_moment(W, [&](std::span<const double> pt, std::size_t j) {
        if (j == origin_flat) return origin_avg;
        double r2 = 0.0;
        for (double v : pt) r2 += v * v;
        return 0.5 * std::log(r2);
    });

    const double D = digamma(n / 4.0) - std::log(2.0);
    const double Mfac = std::sqrt(oc.M2);
    UncertaintyReport rep;
    rep.inequality = "log_mfrwt";
    const double nf2 = norm2(f);
    rep.lhs = b_log + C * oc.Pprime * log_moment(F.field);
    rep.rhs = (D - oc.Pprime * std::log(order.lambda() * order.lambda() * Mfac)) * C * nf2;
    rep.ratio = rep.rhs != 0.0 ? rep.lhs / rep.rhs : 1.0;
    rep.satisfied = rep.lhs >= rep.rhs - 1e-9 * std::abs(rep.rhs);
    rep.constants = {{"Pprime", oc.Pprime}, {"C", C}, {"D", D}, {"M2", oc.M2}, {"norm2", nf2}};
    return rep;
}

namespace {

void require_theta(double theta, std::size_t dims) {
    const double half_n = static_cast<double>(dims) / 2.0;
    if (!(theta > 0.0) || std::abs(theta - half_n) < 1e-12)
        fail(errc::theta_invalid, "theta must be positive and different from N/2");
}

double region_energy(const Spectrum& F, const Region& region) {
    const Grid& g = F.field.grid();
    std::vector<double> pt(g.dims());
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.point(i, pt);
        if (region.contains(pt)) acc += std::norm(F.field[i]);
    }
    return acc * g.cell_volume();
}

} // namespace

UncertaintyReport local_uncertainty(const SampledField& f, const FracOrder& order,
                                    const Region& region, double theta) {
    const double n = static_cast<double>(order.dims());
    require_theta(theta, order.dims());
    OrderConstants oc = order_constants(order);

    Spectrum F = frft_fast(f, order);
    const double volK = region.grid_volume(F.field.grid());
    const double pref = oc.front2 * oc.abs_sin / std::pow(order.lambda() * order.lambda(), n);
    const double nf2 = norm2(f);
    const double mom = power_moment(f, 2.0 * theta);

    UncertaintyReport rep;
    rep.inequality = "local_mfrft";
    rep.lhs = region_energy(F, region);
    if (theta < n / 2.0) {
        if (volK <= 0.0)
            fail(errc::region_invalid, "local_uncertainty: region of zero grid volume");
        rep.rhs = pref * std::pow(volK, 2.0 * theta / n) * mom;
    } else {
        rep.rhs = pref * volK * std::pow(nf2, 1.0 - n / (2.0 * theta)) *
                  std::pow(mom, n / (2.0 * theta));
    }
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    rep.satisfied = true; // A_theta is existential; the ratio is the estimate
    rep.constants = {{"volK", volK}, {"theta", theta}, {"prefactor", pref}, {"norm2", nf2}};
    return rep;
}

UncertaintyReport local_uncertainty_mfrwt(const SampledField& f, const Generator& psi,
                                          const ScaleGrid& scales, const FracOrder& order,
                                          const Region& region, double theta) {
    const double n = static_cast<double>(order.dims());
    require_theta(theta, order.dims());
    OrderConstants oc = order_constants(order);
    const double C = checked_admissibility(psi, order, f.grid());

    Spectrum F = frft_fast(f, order);
    const double volK = region.grid_volume(F.field.grid());
    const double pref = oc.front2 * oc.abs_sin / std::pow(order.lambda() * order.lambda(), n);

    WaveletCoefficients W = mfrwt_direct(f, psi, scales, f.grid(), order);
    UncertaintyReport rep;
    rep.inequality = "local_mfrwt";
    rep.lhs = region_energy(F, region);

    double wavelet_side;
    if (theta < n / 2.0) {
        if (volK <= 0.0)
            fail(errc::region_invalid, "local_uncertainty_mfrwt: region of zero grid volume");
        wavelet_side = wavelet_b_moment(W, [&](std::span<const double> pt, std::size_t) {
            double r2 = 0.0;
            for (double v : pt) r2 += v * v;
            return std::pow(r2, theta);
        });
        rep.rhs = (pref / C) * std::pow(volK, 2.0 * theta / n) * wavelet_side;
    } else {
        // per-scale mixed norms on the translation grid, then scale quadrature
        const Grid& g = W.translations;
        const std::size_t nb = g.size();
        std::vector<double> r2theta(nb);
        std::vector<double> pt(g.dims());
        for (std::size_t j = 0; j < nb; ++j) {
            g.point(j, pt);
            double r2 = 0.0;
            for (double v : pt) r2 += v * v;
            r2theta[j] = std::pow(r2, theta);
        }
        double acc = 0.0;
        for (std::size_t s = 0; s < W.scales.size(); ++s) {
            double e = 0.0, m = 0.0;
            for (std::size_t j = 0; j < nb; ++j) {
                double w2v = std::norm(W.values[s * nb + j]);
                e += w2v;
                m += r2theta[j] * w2v;
            }
            e *= g.cell_volume();
            m *= g.cell_volume();
            acc += std::pow(e, 1.0 - n / (2.0 * theta)) * std::pow(m, n / (2.0 * theta)) *
                   W.scales.weight_inv_square(s);
        }
        wavelet_side = acc;
        rep.rhs = (pref / C) * volK * wavelet_side;
    }
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    rep.satisfied = true;
    // two-path consistency datum: the wavelet-side denominator against
    // C * (signal-side moment), reported not asserted
    rep.constants = {{"volK", volK},
                     {"theta", theta},
                     {"C", C},
                     {"wavelet_side", wavelet_side},
                     {"signal_side_times_C", C * power_moment(f, 2.0 * theta)}};
    return rep;
}

} // namespace fracwave
