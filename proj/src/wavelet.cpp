#include "fracwave/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace fracwave {

namespace {

const double kPi = std::numbers::pi;

double abs_product(std::span<const double> a) {
    double p = 1.0;
    for (double v : a) p *= std::abs(v);
    return p;
}

void require_scale(std::span<const double> a) {
    for (double v : a)
        if (v == 0.0 || !std::isfinite(v))
            fail(errc::scale_invalid, "scale components must be finite and nonzero");
}

/// |u| limit per axis beyond which the Riemann-sum spectrum of a field on
/// `grid` is aliased rather than small.
std::vector<double> alias_limits(const Grid& grid, const FracOrder& order) {
    std::vector<double> lim(grid.dims());
    const double l2 = order.lambda() * order.lambda();
    for (std::size_t k = 0; k < grid.dims(); ++k)
        lim[k] = kPi * std::abs(std::sin(order.alpha(k))) / (l2 * grid.spacing(k));
    return lim;
}

double checked_admissibility(const Generator& psi, const FracOrder& order, const Grid& quad_grid) {
    AdmissibilityReport rep = admissibility_auto(psi, order, quad_grid);
    if (!rep.converged || rep.diverging)
        fail(errc::not_converged, "admissibility constant did not converge for this wavelet/order");
    return rep.constant;
}

} // namespace

double PropertyReport::max() const {
    return std::max({linearity, anti_linearity, dilation, conjugacy, parity, translation});
}

SampledField daughter(const Generator& psi, std::span<const double> a, std::span<const double> b,
                      const FracOrder& order, const Grid& out) {
    const std::size_t n = order.dims();
    if (psi.dims() != n || a.size() != n || b.size() != n || out.dims() != n)
        fail(errc::grid_mismatch, "daughter: dims mismatch");
    require_scale(a);

    const double l2 = order.lambda() * order.lambda();
    double b_phase = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        b_phase += order.chirp_rate(k) * b[k] * b[k];
    const cdouble prefactor =
        std::conj(order.front_factor()) * std::polar(1.0, l2 * b_phase) / std::sqrt(abs_product(a));

    std::vector<cdouble> vals(out.size());
    std::vector<double> t(n), v(n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.point(i, t);
        double phase = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = (t[k] - b[k]) / a[k];
            phase += order.chirp_rate(k) * (v[k] * v[k] - t[k] * t[k]);
        }
        vals[i] = prefactor * std::polar(1.0, l2 * phase) * psi(v);
    }
    return SampledField(out, std::move(vals));
}

cdouble wavelet_coefficient(const SampledField& f, const Generator& psi, std::span<const double> a,
                            std::span<const double> b, const FracOrder& order) {
    return inner_product(f, daughter(psi, a, b, order, f.grid()));
}

AdmissibilityReport admissibility_constant(const Generator& psi, const FracOrder& order,
                                           const ScaleGrid& u_grid, const Grid& quad_grid) {
    const std::size_t n = order.dims();
    if (psi.dims() != n || u_grid.dims() != n || quad_grid.dims() != n)
        fail(errc::grid_mismatch, "admissibility_constant: dims mismatch");

    SampledField psis = sample(psi, quad_grid);
    std::vector<double> flat(u_grid.size() * n);
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
        auto p = u_grid.point(i);
        std::copy(p.begin(), p.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    std::vector<cdouble> F = frft_direct_at(psis, order, flat);

    AdmissibilityReport rep;
    rep.integrand.resize(u_grid.size());
    const double twopi_n = std::pow(2.0 * kPi, static_cast<double>(n));
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
        rep.integrand[i] = std::norm(F[i]);
        rep.constant += twopi_n * rep.integrand[i] * u_grid.weight_inv_abs(i);
    }

    // outer 10% magnitude shell
    double rho_max = 0.0;
    for (std::size_t i = 0; i < u_grid.size(); ++i)
        rho_max = std::max(rho_max, abs_product(u_grid.point(i)));
    const double shell = std::pow(0.9, static_cast<double>(n)) * rho_max;
    double outer = 0.0;
    for (std::size_t i = 0; i < u_grid.size(); ++i)
        if (abs_product(u_grid.point(i)) >= shell)
            outer += twopi_n * rep.integrand[i] * u_grid.weight_inv_abs(i);
    rep.converged = rep.constant > 0.0 && outer < 0.01 * rep.constant;

    // inner-edge divergence probe: extend the grid inward twice by halving
    // a_min; log-divergent integrands give non-decaying increments.
    auto inner_increment = [&](double lo, double hi) {
        ScaleGrid shell_grid(n, lo, hi, 8, u_grid.is_signed());
        std::vector<double> pf(shell_grid.size() * n);
        for (std::size_t i = 0; i < shell_grid.size(); ++i) {
            auto p = shell_grid.point(i);
            std::copy(p.begin(), p.end(), pf.begin() + static_cast<std::ptrdiff_t>(i * n));
        }
        std::vector<cdouble> Fv = frft_direct_at(psis, order, pf);
        double acc = 0.0;
        for (std::size_t i = 0; i < shell_grid.size(); ++i)
            acc += twopi_n * std::norm(Fv[i]) * shell_grid.weight_inv_abs(i);
        return acc;
    };
    const double amin = u_grid.a_min();
    double inc1 = inner_increment(amin / 2.0, amin);
    double inc2 = inner_increment(amin / 4.0, amin / 2.0);
    rep.diverging = inc1 > 1e-6 * std::max(rep.constant, 1e-300) && inc2 > 0.75 * inc1;
    return rep;
}

AdmissibilityReport admissibility_auto(const Generator& psi, const FracOrder& order,
                                       const Grid& quad_grid) {
    std::vector<double> lim = alias_limits(quad_grid, order);
    double amax = 0.75 * *std::min_element(lim.begin(), lim.end());
    double amin = amax / 65536.0;
    std::size_t count = quad_grid.dims() == 1 ? 400 : 64;
    ScaleGrid u(quad_grid.dims(), amin, amax, count, true);
    return admissibility_constant(psi, order, u, quad_grid);
}

WaveletCoefficients mfrwt_direct(const SampledField& f, const Generator& psi,
                                 const ScaleGrid& scales, const Grid& translations,
                                 const FracOrder& order) {
    const std::size_t nb = translations.size();
    std::vector<cdouble> vals(scales.size() * nb);
    std::vector<double> b(order.dims());
    for (std::size_t s = 0; s < scales.size(); ++s) {
        auto a = scales.point(s);
        for (std::size_t j = 0; j < nb; ++j) {
            translations.point(j, b);
            vals[s * nb + j] = inner_product(f, daughter(psi, a, b, order, f.grid()));
        }
    }
    return WaveletCoefficients{scales, translations, order, psi.id(), std::move(vals)};
}

WaveletCoefficients mfrwt_spectral(const SampledField& f, const Generator& psi,
                                   const ScaleGrid& scales, const FracOrder& order) {
    const Grid& grid = f.grid();
    const std::size_t n = order.dims();
    if (psi.dims() != n || scales.dims() != n || grid.dims() != n)
        fail(errc::grid_mismatch, "mfrwt_spectral: dims mismatch");

    // zero-pad so the periodization period exceeds the widest daughter span
    const double reach = 6.0;
    double amax_abs = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i)
        for (double ak : scales.point(i)) amax_abs = std::max(amax_abs, std::abs(ak));
    std::vector<double> half(n);
    std::vector<std::size_t> samples(n);
    std::vector<std::size_t> offset(n);
    for (std::size_t k = 0; k < n; ++k) {
        double target = grid.half_extent(k) + amax_abs * reach;
        std::size_t extra = static_cast<std::size_t>(
            std::ceil((target - grid.half_extent(k)) / grid.spacing(k) / 2.0)) * 2;
        samples[k] = grid.samples(k) + extra;
        half[k] = 0.5 * static_cast<double>(samples[k]) * grid.spacing(k);
        offset[k] = extra / 2;
    }
    Grid padded(half, samples);
    std::vector<cdouble> pvals(padded.size());
    {
        std::vector<std::size_t> idx(n), pidx(n);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid.unflatten(i, idx);
            for (std::size_t k = 0; k < n; ++k) pidx[k] = idx[k] + offset[k];
            pvals[padded.flatten(pidx)] = f[i];
        }
    }
    Spectrum Ff = frft_fast(SampledField(padded, std::move(pvals)), order);
    const Grid& xi_grid = Ff.field.grid();

    SampledField psis = sample(psi, grid); // wavelet quadrature on the original grid
    std::vector<double> lim = alias_limits(grid, order);

    const double l2 = order.lambda() * order.lambda();
    const cdouble cr = order.front_factor() / std::conj(order.front_factor());
    const double sq2pi_n = std::pow(std::sqrt(2.0 * kPi), static_cast<double>(n));

    const std::size_t nb = grid.size();
    std::vector<cdouble> out(scales.size() * nb);
    std::vector<double> xi(n);
    std::vector<std::size_t> idx(n), pidx(n);
    std::vector<double> scaled_pts;
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < scales.size(); ++s) {
        auto a = scales.point(s);
        // F psi at a*xi, skipping points beyond the alias-safe band (the
        // continuum spectrum there is negligible; the quadrature is not)
        scaled_pts.clear();
        keep.clear();
        for (std::size_t m = 0; m < xi_grid.size(); ++m) {
            xi_grid.point(m, xi);
            bool ok = true;
            for (std::size_t k = 0; k < n; ++k) {
                xi[k] *= a[k];
                if (std::abs(xi[k]) > 0.95 * lim[k]) ok = false;
            }
            if (ok) {
                keep.push_back(m);
                scaled_pts.insert(scaled_pts.end(), xi.begin(), xi.end());
            }
        }
        std::vector<cdouble> Fpsi_scaled = frft_direct_at(psis, order, scaled_pts);
        std::vector<cdouble> G(xi_grid.size(), 0.0);
        const cdouble coef = std::sqrt(abs_product(a)) * sq2pi_n * cr;
        for (std::size_t q = 0; q < keep.size(); ++q) {
            std::size_t m = keep[q];
            xi_grid.point(m, xi);
            double phase = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                phase += order.chirp_rate(k) * (a[k] * xi[k]) * (a[k] * xi[k]);
            G[m] = coef * std::polar(1.0, l2 * phase) * Ff.field[m] * std::conj(Fpsi_scaled[q]);
        }
        SampledField row = frft_fast(SampledField(xi_grid, std::move(G)), order.negated()).field;
        for (std::size_t i = 0; i < nb; ++i) {
            grid.unflatten(i, idx);
            for (std::size_t k = 0; k < n; ++k) pidx[k] = idx[k] + offset[k];
            out[s * nb + i] = row[padded.flatten(pidx)];
        }
    }
    return WaveletCoefficients{scales, grid, order, psi.id(), std::move(out)};
}

cdouble inner_product_relation_check(const SampledField& f, const SampledField& g,
                                     const Generator& psi, const ScaleGrid& scales,
                                     const Grid& translations, const FracOrder& order) {
    cdouble fg = inner_product(f, g);
    if (std::abs(fg) < 1e-12)
        fail(errc::undefined_ratio, "inner_product_relation_check: <f,g> is numerically zero");
    double C = checked_admissibility(psi, order, translations);

    WaveletCoefficients Wf = mfrwt_direct(f, psi, scales, translations, order);
    WaveletCoefficients Wg = mfrwt_direct(g, psi, scales, translations, order);
    const std::size_t nb = translations.size();
    cdouble acc = 0.0;
    for (std::size_t s = 0; s < scales.size(); ++s) {
        cdouble row = 0.0;
        for (std::size_t j = 0; j < nb; ++j)
            row += Wf.values[s * nb + j] * std::conj(Wg.values[s * nb + j]);
        acc += row * translations.cell_volume() * scales.weight_inv_square(s);
    }
    return acc / (C * fg);
}

SampledField reconstruct(const WaveletCoefficients& coeffs, const Generator& psi,
                         const FracOrder& order) {
    if (!(coeffs.order == order))
        fail(errc::order_mismatch, "reconstruct: order does not match the coefficients' tag");
    const Grid& grid = coeffs.translations;
    double C = checked_admissibility(psi, order, grid);

    const std::size_t nb = grid.size();
    std::vector<cdouble> acc(nb, 0.0);
    std::vector<double> b(order.dims());
    for (std::size_t s = 0; s < coeffs.scales.size(); ++s) {
        auto a = coeffs.scales.point(s);
        const double ws = coeffs.scales.weight_inv_square(s) * grid.cell_volume();
        for (std::size_t j = 0; j < nb; ++j) {
            grid.point(j, b);
            cdouble w = coeffs.values[s * nb + j] * ws;
            if (w == cdouble(0.0)) continue;
            SampledField d = daughter(psi, a, b, order, grid);
            for (std::size_t t = 0; t < nb; ++t) acc[t] += w * d[t];
        }
    }
    for (auto& v : acc) v /= C;
    return SampledField(grid, std::move(acc));
}

cdouble reproducing_kernel(std::span<const double> a0, std::span<const double> b0,
                           std::span<const double> a, std::span<const double> b,
                           const Generator& psi, const FracOrder& order, const Grid& grid,
                           std::optional<double> admissibility) {
    double C = admissibility ? *admissibility : checked_admissibility(psi, order, grid);
    SampledField d_ab = daughter(psi, a, b, order, grid);
    SampledField d_00 = daughter(psi, a0, b0, order, grid);
    return inner_product(d_ab, d_00) / C;
}

PropertyReport property_suite(const Generator& f, const Generator& psi, const FracOrder& order,
                              const PropertyParams& params) {
    const std::size_t n = order.dims();
    const Grid& grid = params.grid;
    if (f.dims() != n || psi.dims() != n || grid.dims() != n)
        fail(errc::grid_mismatch, "property_suite: dims mismatch");
    if (params.probes.empty())
        fail(errc::config_invalid, "property_suite: need at least one (a,b) probe");
    for (double s : params.sigmas)
        if (!(s > 0.0)) fail(errc::sigma_invalid, "property_suite: sigma must be positive");
    if (params.translation.size() != n)
        fail(errc::translation_off_grid, "property_suite: translation dims mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        double steps = params.translation[k] / grid.spacing(k);
        if (std::abs(steps - std::round(steps)) > 1e-9)
            fail(errc::translation_off_grid, "property_suite: translation must be a grid multiple");
    }

    const double l2 = order.lambda() * order.lambda();
    SampledField fs = sample(f, grid);

    auto W = [&](const SampledField& field, const Generator& wav, std::span<const double> a,
                 std::span<const double> b, const FracOrder& ord) {
        return inner_product(field, daughter(wav, a, b, ord, grid));
    };

    PropertyReport rep;
    const cdouble r(2.0, 0.5), s_coef(-1.0, 1.5);
    SampledField gs = sample(params.second_signal, grid);
    std::vector<cdouble> combo(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) combo[i] = r * fs[i] + s_coef * gs[i];
    SampledField rf_sg(grid, std::move(combo));

    Generator psi_combo = Generator::linear_combination(r, psi, s_coef, params.second_wavelet);
    Generator f_conj = f.conjugated();
    Generator psi_conj = psi.conjugated();
    Generator f_refl = f.reflected();
    FracOrder neg = order.negated();

    SampledField f_conj_s = sample(f_conj, grid);
    SampledField f_refl_s = sample(f_refl, grid);

    // fractional translation pieces
    const std::vector<double>& y = params.translation;
    Generator f_trans = f.translated(y);
    std::vector<double> mod(n);
    for (std::size_t k = 0; k < n; ++k) mod[k] = 2.0 * l2 * order.chirp_rate(k) * y[k];
    Generator f_check = f.modulated(mod);
    SampledField f_trans_s = sample(f_trans, grid);
    SampledField f_check_s = sample(f_check, grid);
    double phase_y = 0.0;
    for (std::size_t k = 0; k < n; ++k) phase_y += order.chirp_rate(k) * y[k] * y[k];

    std::vector<double> ab(n), bb(n), minus_a(n), minus_b(n), b_minus_y(n), sa(n), sb(n);
    for (const auto& probe : params.probes) {
        if (probe.size() != 2 * n)
            fail(errc::config_invalid, "property_suite: probe needs a and b per axis");
        std::copy(probe.begin(), probe.begin() + static_cast<std::ptrdiff_t>(n), ab.begin());
        std::copy(probe.begin() + static_cast<std::ptrdiff_t>(n), probe.end(), bb.begin());

        cdouble w_f = W(fs, psi, ab, bb, order);
        cdouble w_g = W(gs, psi, ab, bb, order);

        // (i) linearity in f
        rep.linearity = std::max(rep.linearity,
                                 std::abs(W(rf_sg, psi, ab, bb, order) - (r * w_f + s_coef * w_g)));

        // (ii) anti-linearity in psi
        cdouble w_phi = W(fs, params.second_wavelet, ab, bb, order);
        rep.anti_linearity = std::max(
            rep.anti_linearity, std::abs(W(fs, psi_combo, ab, bb, order) -
                                         (std::conj(r) * w_f + std::conj(s_coef) * w_phi)));

        // (iii) dilation covariance; the analyzing wavelet keeps the original
        // lambda chirp, i.e. the transform at lambda/sigma analyzes with
        // psi * exp(i(lambda^2 - (lambda/sigma)^2) sum a(alpha_k) v_k^2)
        for (double sigma : params.sigmas) {
            FracOrder ord_s = order.with_lambda(order.lambda() / sigma);
            std::vector<double> extra(n);
            for (std::size_t k = 0; k < n; ++k)
                extra[k] = (l2 - ord_s.lambda() * ord_s.lambda()) * order.chirp_rate(k);
            Generator psi_sigma = psi.with_chirp(extra);
            cdouble cprime = std::pow(sigma, 0.5 * static_cast<double>(n)) *
                             std::conj(order.front_factor() / ord_s.front_factor());
            for (std::size_t k = 0; k < n; ++k) {
                sa[k] = sigma * ab[k];
                sb[k] = sigma * bb[k];
            }
            SampledField f_dil = sample(f.dilated(sigma), grid);
            cdouble lhs = W(f_dil, psi, ab, bb, order);
            cdouble rhs = cprime / std::pow(sigma, static_cast<double>(n)) *
                          W(fs, psi_sigma, sa, sb, ord_s);
            rep.dilation = std::max(rep.dilation, std::abs(lhs - rhs));
        }

        // (iv) conjugacy
        rep.conjugacy = std::max(rep.conjugacy,
                                 std::abs(W(f_conj_s, psi, ab, bb, order) -
                                          std::conj(W(fs, psi_conj, ab, bb, neg))));

        // (v) parity
        for (std::size_t k = 0; k < n; ++k) {
            minus_a[k] = -ab[k];
            minus_b[k] = -bb[k];
        }
        rep.parity = std::max(rep.parity, std::abs(W(f_refl_s, psi, ab, bb, order) -
                                                   W(fs, psi, minus_a, minus_b, order)));

        // (vi) fractional translation
        double phase_b = 0.0, phase_by = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            b_minus_y[k] = bb[k] - y[k];
            phase_b += order.chirp_rate(k) * bb[k] * bb[k];
            phase_by += order.chirp_rate(k) * b_minus_y[k] * b_minus_y[k];
        }
        cdouble phases = std::polar(1.0, l2 * (-phase_b + phase_by + phase_y));
        rep.translation = std::max(rep.translation,
                                   std::abs(W(f_trans_s, psi, ab, bb, order) -
                                            phases * W(f_check_s, psi, ab, b_minus_y, order)));
    }
    return rep;
}

} // namespace fracwave
