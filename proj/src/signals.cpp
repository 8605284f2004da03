#include "fracwave/signals.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace fracwave {

namespace {

std::vector<Generator::Axis> base_axes(const std::vector<double>& center,
                                       const std::vector<double>& width,
                                       const std::vector<cdouble>& coeffs) {
    if (center.size() != width.size() || center.empty())
        fail(errc::config_invalid, "generator needs matching nonempty center/width");
    std::vector<Generator::Axis> axes(center.size());
    for (std::size_t k = 0; k < center.size(); ++k) {
        if (!(width[k] > 0.0))
            fail(errc::config_invalid, "generator width must be positive");
        axes[k].coeffs = coeffs;
        axes[k].center = center[k];
        axes[k].width = width[k];
    }
    return axes;
}

} // namespace

std::vector<double> hermite_functions(double s, std::size_t max_order) {
    std::vector<double> h(max_order + 1);
    h[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * s * s);
    if (max_order >= 1) h[1] = std::sqrt(2.0) * s * h[0];
    for (std::size_t n = 1; n < max_order; ++n)
        h[n + 1] = std::sqrt(2.0 / (n + 1.0)) * s * h[n] - std::sqrt(n / (n + 1.0)) * h[n - 1];
    return h;
}

Generator::Generator(std::string kind, std::vector<Axis> axes, cdouble amplitude, std::uint64_t seed)
    : kind_(std::move(kind)), axes_(std::move(axes)), amplitude_(amplitude), seed_(seed) {
    if (axes_.empty())
        fail(errc::config_invalid, "generator needs at least one axis");
    for (const Axis& ax : axes_)
        if (ax.coeffs.empty() || !(ax.width > 0.0))
            fail(errc::config_invalid, "generator axis needs coefficients and positive width");
}

Generator Generator::gaussian(std::vector<double> center, std::vector<double> width) {
    return Generator("gaussian", base_axes(center, width, {1.0}));
}

Generator Generator::hermite1(std::vector<double> center, std::vector<double> width) {
    return Generator("hermite1", base_axes(center, width, {0.0, 1.0}));
}

Generator Generator::gabor(std::vector<double> center, std::vector<double> width,
                           std::vector<double> mod_freq) {
    auto axes = base_axes(center, width, {1.0});
    if (mod_freq.size() != axes.size())
        fail(errc::config_invalid, "gabor needs one modulation frequency per axis");
    for (std::size_t k = 0; k < axes.size(); ++k) axes[k].mod_freq = mod_freq[k];
    return Generator("gabor", std::move(axes));
}

Generator Generator::chirped_gaussian(std::vector<double> center, std::vector<double> width,
                                      std::vector<double> mod_freq, std::vector<double> chirp_rate) {
    auto axes = base_axes(center, width, {1.0});
    if (mod_freq.size() != axes.size() || chirp_rate.size() != axes.size())
        fail(errc::config_invalid, "chirped_gaussian needs per-axis mod_freq and chirp_rate");
    for (std::size_t k = 0; k < axes.size(); ++k) {
        axes[k].mod_freq = mod_freq[k];
        axes[k].chirp_rate = chirp_rate[k];
    }
    return Generator("chirped_gaussian", std::move(axes));
}

Generator Generator::hermite_superposition(std::size_t dims, std::uint64_t seed, std::size_t max_order) {
    if (dims == 0) fail(errc::config_invalid, "generator needs dims >= 1");
    std::mt19937_64 engine(seed);
    // raw engine draws mapped to [-1,1]; distribution classes are not
    // bit-reproducible across standard libraries
    auto draw = [&engine]() {
        return 2.0 * (static_cast<double>(engine() >> 11) * 0x1.0p-53) - 1.0;
    };
    std::vector<Axis> axes(dims);
    for (std::size_t k = 0; k < dims; ++k) {
        std::vector<cdouble> co(max_order + 1);
        double norm2 = 0.0;
        for (auto& c : co) {
            double v = draw();
            c = v;
            norm2 += v * v;
        }
        for (auto& c : co) c /= std::sqrt(norm2);
        axes[k].coeffs = std::move(co);
    }
    return Generator("hermite_superposition", std::move(axes), 1.0, seed);
}

cdouble Generator::operator()(std::span<const double> point) const {
    cdouble v = amplitude_;
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        const Axis& ax = axes_[k];
        const double t = point[k];
        const double s = (t - ax.center) / ax.width;
        std::vector<double> h = hermite_functions(s, ax.coeffs.size() - 1);
        cdouble mix = 0.0;
        for (std::size_t n = 0; n < ax.coeffs.size(); ++n) mix += ax.coeffs[n] * h[n];
        v *= mix * std::polar(1.0, ax.mod_freq * t + ax.chirp_rate * t * t);
    }
    return v;
}

std::string Generator::id() const {
    std::ostringstream os;
    os << kind_;
    if (kind_ == "hermite_superposition") os << "(seed=" << seed_ << ")";
    else {
        os << "(";
        for (std::size_t k = 0; k < axes_.size(); ++k) {
            if (k) os << ";";
            os << "c=" << axes_[k].center << ",w=" << axes_[k].width;
            if (axes_[k].mod_freq != 0.0) os << ",f=" << axes_[k].mod_freq;
            if (axes_[k].chirp_rate != 0.0) os << ",r=" << axes_[k].chirp_rate;
        }
        os << ")";
    }
    return os.str();
}

Generator Generator::dilated(double sigma) const {
    if (!(sigma > 0.0)) fail(errc::sigma_invalid, "dilation factor must be positive");
    Generator g = *this;
    for (Axis& ax : g.axes_) {
        ax.center /= sigma;
        ax.width /= sigma;
        ax.mod_freq *= sigma;
        ax.chirp_rate *= sigma * sigma;
    }
    return g;
}

Generator Generator::translated(std::span<const double> y) const {
    Generator g = *this;
    for (std::size_t k = 0; k < g.axes_.size(); ++k) {
        Axis& ax = g.axes_[k];
        ax.center += y[k];
        g.amplitude_ *= std::polar(1.0, ax.chirp_rate * y[k] * y[k] - ax.mod_freq * y[k]);
        ax.mod_freq -= 2.0 * ax.chirp_rate * y[k];
    }
    return g;
}

Generator Generator::modulated(std::span<const double> freq) const {
    Generator g = *this;
    for (std::size_t k = 0; k < g.axes_.size(); ++k) g.axes_[k].mod_freq += freq[k];
    return g;
}

Generator Generator::with_chirp(std::span<const double> rates) const {
    Generator g = *this;
    for (std::size_t k = 0; k < g.axes_.size(); ++k) g.axes_[k].chirp_rate += rates[k];
    return g;
}

Generator Generator::conjugated() const {
    Generator g = *this;
    g.amplitude_ = std::conj(g.amplitude_);
    for (Axis& ax : g.axes_) {
        for (auto& c : ax.coeffs) c = std::conj(c);
        ax.mod_freq = -ax.mod_freq;
        ax.chirp_rate = -ax.chirp_rate;
    }
    return g;
}

Generator Generator::reflected() const {
    Generator g = *this;
    for (Axis& ax : g.axes_) {
        ax.center = -ax.center;
        ax.mod_freq = -ax.mod_freq;
        for (std::size_t n = 1; n < ax.coeffs.size(); n += 2) ax.coeffs[n] = -ax.coeffs[n];
    }
    return g;
}

Generator Generator::scaled(cdouble factor) const {
    Generator g = *this;
    g.amplitude_ *= factor;
    return g;
}

Generator Generator::linear_combination(cdouble r, const Generator& a, cdouble s, const Generator& b) {
    if (a.dims() != b.dims())
        fail(errc::config_invalid, "linear_combination: dims differ");
    if (a.dims() != 1)
        fail(errc::config_invalid, "linear_combination is defined for one-axis generators");
    const Axis& xa = a.axes_[0];
    const Axis& xb = b.axes_[0];
    if (xa.center != xb.center || xa.width != xb.width || xa.mod_freq != xb.mod_freq ||
        xa.chirp_rate != xb.chirp_rate)
        fail(errc::config_invalid, "linear_combination requires a shared axis frame");
    Axis out = xa;
    out.coeffs.resize(std::max(xa.coeffs.size(), xb.coeffs.size()), 0.0);
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        cdouble ca = n < xa.coeffs.size() ? xa.coeffs[n] : 0.0;
        cdouble cb = n < xb.coeffs.size() ? xb.coeffs[n] : 0.0;
        out.coeffs[n] = r * a.amplitude_ * ca + s * b.amplitude_ * cb;
    }
    return Generator("combined", {out}, 1.0);
}

SampledField sample(const Generator& gen, const Grid& grid) {
    if (gen.dims() != grid.dims())
        fail(errc::grid_mismatch, "sample: generator and grid dims differ");
    std::vector<cdouble> vals(grid.size());
    std::vector<double> pt(grid.dims());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.point(i, pt);
        vals[i] = gen(pt);
    }
    return SampledField(grid, std::move(vals));
}

SampledField normalize(const SampledField& f) {
    double n = l2_norm(f);
    if (n <= 0.0)
        fail(errc::zero_field, "cannot normalize the zero field");
    std::vector<cdouble> vals(f.values().begin(), f.values().end());
    for (auto& v : vals) v /= n;
    return SampledField(f.grid(), std::move(vals));
}

} // namespace fracwave
