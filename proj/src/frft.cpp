#include "fracwave/frft.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace fracwave {

namespace {

constexpr double kMinAbsSin = 1e-6;
const double kPi = std::numbers::pi;

std::mutex g_warn_mutex;
WarningHandler g_warning_handler = [](const std::string& msg) {
    std::cerr << "fracwave: warning: " << msg << "\n";
};

void warn(const std::string& msg) {
    std::lock_guard<std::mutex> lock(g_warn_mutex);
    if (g_warning_handler) g_warning_handler(msg);
}

std::mutex g_fftw_mutex; // plan creation/destruction is not thread-safe

void fft_nd(std::vector<cdouble>& data, const std::vector<std::size_t>& dims) {
    std::vector<int> n(dims.begin(), dims.end());
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(), ptr, ptr,
                             FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(g_fftw_mutex);
        fftw_destroy_plan(plan);
    }
}

void check_chirp_sampling(const Grid& grid, const FracOrder& order) {
    double margin = chirp_sampling_margin(grid, order);
    if (margin > kPi / 4.0)
        warn("chirp sampling criterion violated: lambda^2*|a|*L*Delta = " +
             std::to_string(margin) + " > pi/4; quadratic phase is under-sampled");
}

} // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard<std::mutex> lock(g_warn_mutex);
    std::swap(g_warning_handler, handler);
    return handler;
}

FracOrder::FracOrder(std::vector<double> alpha, double lambda)
    : alpha_(std::move(alpha)), lambda_(lambda) {
    if (alpha_.empty())
        fail(errc::order_invalid, "order needs at least one angle");
    if (!(lambda_ != 0.0) || !std::isfinite(lambda_))
        fail(errc::order_invalid, "lambda must be finite and nonzero");
    const std::size_t n = alpha_.size();
    chirp_rate_.resize(n);
    csc_.resize(n);
    sec_.resize(n);
    alpha_lambda_.resize(n);
    axis_factor_.resize(n);
    abs_sin_ = 1.0;
    max_csc2_ = 0.0;
    front_ = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        double a = alpha_[k];
        if (!std::isfinite(a) || a <= -kPi || a >= kPi || a == 0.0)
            fail(errc::order_invalid, "alpha must lie in (-pi, pi) and be nonzero");
        double s = std::sin(a);
        if (std::abs(s) < kMinAbsSin)
            fail(errc::order_invalid, "alpha too close to a degenerate (delta-kernel) order");
        double cot = std::cos(a) / s;
        chirp_rate_[k] = 0.5 * cot;
        csc_[k] = 1.0 / s;
        sec_[k] = 1.0 / std::cos(a);
        axis_factor_[k] = std::sqrt(cdouble(1.0, -cot));
        // arccot branch containing alpha_k: (0,pi) for alpha>0, (-pi,0) for alpha<0
        double base = std::atan2(1.0, lambda_ * lambda_ * cot);
        alpha_lambda_[k] = (a > 0.0) ? base : base - kPi;
        abs_sin_ *= std::abs(s);
        max_csc2_ = std::max(max_csc2_, csc_[k] * csc_[k]);
        front_ *= lambda_ * axis_factor_[k];
    }
}

cdouble FracOrder::modified_axis_product() const {
    cdouble p = 1.0;
    for (double al : alpha_lambda_)
        p *= std::sqrt(cdouble(1.0, -std::cos(al) / std::sin(al)));
    return p;
}

FracOrder FracOrder::negated() const {
    std::vector<double> neg(alpha_.size());
    for (std::size_t k = 0; k < alpha_.size(); ++k) neg[k] = -alpha_[k];
    return FracOrder(std::move(neg), lambda_);
}

SampledField chirp(const Grid& grid, const FracOrder& order, int sign) {
    if (grid.dims() != order.dims())
        fail(errc::grid_mismatch, "chirp: grid and order dims differ");
    const double l2 = order.lambda() * order.lambda() * (sign >= 0 ? 1.0 : -1.0);
    std::vector<cdouble> vals(grid.size());
    std::vector<double> pt(grid.dims());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.point(i, pt);
        double phase = 0.0;
        for (std::size_t k = 0; k < grid.dims(); ++k)
            phase += order.chirp_rate(k) * pt[k] * pt[k];
        vals[i] = std::polar(1.0, l2 * phase);
    }
    return SampledField(grid, std::move(vals));
}

cdouble eval_kernel(std::span<const double> x, std::span<const double> xi, const FracOrder& order) {
    const double l2 = order.lambda() * order.lambda();
    cdouble k = 1.0;
    for (std::size_t ax = 0; ax < order.dims(); ++ax) {
        double phase = l2 * (order.chirp_rate(ax) * (x[ax] * x[ax] + xi[ax] * xi[ax]) -
                             x[ax] * xi[ax] * order.csc(ax));
        k *= order.lambda() * order.axis_factor(ax) / std::sqrt(2.0 * kPi) * std::polar(1.0, phase);
    }
    return k;
}

double chirp_sampling_margin(const Grid& grid, const FracOrder& order) {
    const double l2 = order.lambda() * order.lambda();
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.dims(); ++k)
        worst = std::max(worst, l2 * std::abs(order.chirp_rate(k)) * grid.half_extent(k) * grid.spacing(k));
    return worst;
}

Grid induced_spectral_grid(const Grid& in, const FracOrder& order) {
    const double l2 = order.lambda() * order.lambda();
    std::vector<double> half(in.dims());
    std::vector<std::size_t> samples(in.dims());
    for (std::size_t k = 0; k < in.dims(); ++k) {
        double dxi = (2.0 * kPi / (static_cast<double>(in.samples(k)) * in.spacing(k))) *
                     std::abs(std::sin(order.alpha(k))) / l2;
        samples[k] = in.samples(k);
        half[k] = dxi * static_cast<double>(in.samples(k)) / 2.0;
    }
    return Grid(std::move(half), std::move(samples));
}

Spectrum frft_direct(const SampledField& f, const FracOrder& order, const Grid& out_grid) {
    const Grid& in = f.grid();
    if (in.dims() != order.dims() || out_grid.dims() != order.dims())
        fail(errc::grid_mismatch, "frft_direct: dims mismatch");
    check_chirp_sampling(in, order);

    std::vector<cdouble> out(out_grid.size());
    std::vector<double> x(in.dims()), xi(in.dims());
    const double vol = in.cell_volume();
    for (std::size_t o = 0; o < out_grid.size(); ++o) {
        out_grid.point(o, xi);
        cdouble acc = 0.0;
        for (std::size_t i = 0; i < in.size(); ++i) {
            in.point(i, x);
            acc += f[i] * eval_kernel(x, xi, order);
        }
        out[o] = acc * vol;
    }
    return Spectrum{SampledField(out_grid, std::move(out)), order};
}

std::vector<cdouble> frft_direct_at(const SampledField& f, const FracOrder& order,
                                    std::span<const double> points_flat) {
    const Grid& in = f.grid();
    const std::size_t n = order.dims();
    if (in.dims() != n)
        fail(errc::grid_mismatch, "frft_direct_at: dims mismatch");
    if (points_flat.size() % n != 0)
        fail(errc::grid_invalid, "frft_direct_at: point list length not a multiple of dims");

    const std::size_t npts = points_flat.size() / n;
    std::vector<cdouble> out(npts);
    std::vector<double> x(n);
    const double vol = in.cell_volume();
    for (std::size_t o = 0; o < npts; ++o) {
        std::span<const double> xi = points_flat.subspan(o * n, n);
        cdouble acc = 0.0;
        for (std::size_t i = 0; i < in.size(); ++i) {
            in.point(i, x);
            acc += f[i] * eval_kernel(x, xi, order);
        }
        out[o] = acc * vol;
    }
    return out;
}

Spectrum frft_fast(const SampledField& f, const FracOrder& order) {
    const Grid& in = f.grid();
    const std::size_t n = order.dims();
    if (in.dims() != n)
        fail(errc::grid_mismatch, "frft_fast: dims mismatch");
    check_chirp_sampling(in, order);

    const double lambda = order.lambda();
    const double l2 = lambda * lambda;
    Grid out_grid = induced_spectral_grid(in, order);

    // DFT of the chirp-premultiplied samples
    std::vector<cdouble> buf(f.values().begin(), f.values().end());
    {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < in.size(); ++i) {
            in.point(i, x);
            double phase = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                phase += order.chirp_rate(k) * x[k] * x[k];
            buf[i] *= std::polar(1.0, l2 * phase);
        }
    }
    fft_nd(buf, in.sample_counts());

    // Map DFT bins to the induced xi grid: per axis, centered output index
    // jh = j - M/2 needs frequency bin mt = sign(sin alpha)*jh, with the grid
    // offset contributing a factor (-1)^mt (phase e^{+i w L}); the +Nyquist
    // request on sign-flipped axes wraps to -M/2, where the two trigonometric
    // sums coincide.
    const cdouble scale = order.front_factor() * in.cell_volume() /
                          std::pow(std::sqrt(2.0 * kPi), static_cast<double>(n));
    std::vector<cdouble> out(out_grid.size());
    std::vector<std::size_t> idx(n);
    std::vector<double> xi(n);
    for (std::size_t o = 0; o < out_grid.size(); ++o) {
        out_grid.unflatten(o, idx);
        out_grid.point(o, xi);
        std::size_t src = 0;
        int sign = 1;
        double phase = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const long M = static_cast<long>(in.samples(k));
            long jh = static_cast<long>(idx[k]) - M / 2;
            long mt = (order.csc(k) > 0.0) ? jh : -jh;
            if (mt == M / 2) mt = -M / 2;
            if (mt % 2 != 0) sign = -sign;
            src = src * static_cast<std::size_t>(M) + static_cast<std::size_t>((mt + M) % M);
            phase += order.chirp_rate(k) * xi[k] * xi[k];
        }
        out[o] = scale * static_cast<double>(sign) * std::polar(1.0, l2 * phase) * buf[src];
    }
    return Spectrum{SampledField(out_grid, std::move(out)), order};
}

SampledField ifrft(const Spectrum& spectrum, const FracOrder& order) {
    if (!(spectrum.order == order))
        fail(errc::order_mismatch, "ifrft: order does not match the spectrum's tag");
    return frft_fast(spectrum.field, order.negated()).field;
}

double parseval_residual(const SampledField& f, const SampledField& g, const FracOrder& order) {
    cdouble direct = inner_product(f, g);
    Spectrum Ff = frft_fast(f, order);
    Spectrum Fg = frft_fast(g, order);
    cdouble spectral = inner_product(Ff.field, Fg.field);
    return std::abs(spectral - direct) / std::max(std::abs(direct), 1e-30);
}

} // namespace fracwave
