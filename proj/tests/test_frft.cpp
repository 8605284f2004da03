#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracwave/frft.hpp"
#include "fracwave/signals.hpp"

using namespace fracwave;

namespace {
const double kPi = std::numbers::pi;

double rel_l2_diff(const SampledField& a, const SampledField& b) {
    REQUIRE(a.size() == b.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

struct WarningCounter {
    WarningHandler previous;
    static int count;
    WarningCounter() {
        count = 0;
        previous = set_warning_handler([](const std::string&) { ++count; });
    }
    ~WarningCounter() { set_warning_handler(previous); }
};
int WarningCounter::count = 0;

} // namespace

TEST_CASE("order validation and derived quantities") {
    CHECK_THROWS_AS(FracOrder({0.0}, 1.0), Error);
    CHECK_THROWS_AS(FracOrder({kPi}, 1.0), Error);
    CHECK_THROWS_AS(FracOrder({1e-8}, 1.0), Error); // |sin| guard
    CHECK_THROWS_AS(FracOrder({kPi / 3}, 0.0), Error);

    FracOrder o({kPi / 3, -kPi / 4}, 1.3);
    for (std::size_t k = 0; k < 2; ++k) {
        // |c(alpha)|^2 = |csc alpha|
        CHECK(std::norm(o.axis_factor(k)) ==
              doctest::Approx(std::abs(o.csc(k))).epsilon(1e-12));
        // a(alpha)*2*sec(alpha) = csc(alpha)
        CHECK(o.chirp_rate(k) * 2.0 * o.sec(k) == doctest::Approx(o.csc(k)).epsilon(1e-12));
        CHECK(std::signbit(o.alpha_lambda()[k]) == std::signbit(o.alpha(k)));
    }

    FracOrder unit({kPi / 3, -kPi / 4}, 1.0);
    for (std::size_t k = 0; k < 2; ++k)
        CHECK(unit.alpha_lambda()[k] == doctest::Approx(unit.alpha(k)).epsilon(1e-12));
    // at lambda = 1 the lambda-modified axis product coincides with the
    // kernel constant
    CHECK(std::abs(unit.modified_axis_product() - unit.front_factor()) < 1e-12);
}

TEST_CASE("alpha_lambda branch continuity at lambda -> 1") {
    for (double alpha : {0.4, 2.0 * kPi / 5, -1.1}) {
        FracOrder base({alpha}, 1.0);
        for (double lam : {1.0 - 1e-6, 1.0 + 1e-6}) {
            FracOrder o({alpha}, lam);
            CHECK(std::abs(o.alpha_lambda()[0] - base.alpha_lambda()[0]) <= 1e-5);
        }
    }
}

TEST_CASE("chirp values") {
    Grid g({2.0}, {4});
    FracOrder half({kPi / 2}, 1.0);
    SampledField c = chirp(g, half, +1);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(c[i] - 1.0) < 1e-15);

    FracOrder quarter({kPi / 4}, 1.0);
    SampledField cp = chirp(g, quarter, +1);
    // a(pi/4) = 1/2; at x = 1 the value is e^{i/2}
    CHECK(cp[3].real() == doctest::Approx(std::cos(0.5)).epsilon(1e-14));
    CHECK(cp[3].imag() == doctest::Approx(std::sin(0.5)).epsilon(1e-14));

    SampledField cm = chirp(g, quarter, -1);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(cp[i] * cm[i] - 1.0) < 1e-14);
}

TEST_CASE("kernel values and modulus") {
    FracOrder half({kPi / 2}, 1.0);
    double x = 0.7, xi = -1.3;
    cdouble k = eval_kernel({&x, 1}, {&xi, 1}, half);
    cdouble expect = std::polar(1.0 / std::sqrt(2.0 * kPi), -x * xi);
    CHECK(std::abs(k - expect) < 1e-14);

    double z = 0.0;
    CHECK(std::abs(eval_kernel({&z, 1}, {&z, 1}, half) - 1.0 / std::sqrt(2.0 * kPi)) < 1e-14);

    // N=2 modulus identity |K| = prod sqrt|csc| / (2 pi) at lambda = 1
    FracOrder o({kPi / 2, kPi / 3}, 1.0);
    std::vector<double> p{0.4, -0.9}, q{1.1, 0.25};
    double expect_mod = std::sqrt(std::abs(1.0 / std::sin(kPi / 3))) / (2.0 * kPi);
    CHECK(std::abs(eval_kernel(p, q, o)) == doctest::Approx(expect_mod).epsilon(1e-12));

    // lambda != 1 gains a lambda^N factor
    FracOrder ol({kPi / 2, kPi / 3}, 1.7);
    CHECK(std::abs(eval_kernel(p, q, ol)) ==
          doctest::Approx(1.7 * 1.7 * expect_mod).epsilon(1e-12));
}

TEST_CASE("kernel product form matches chirp-factored form") {
    FracOrder o({2.0 * kPi / 5, -0.8}, 1.2);
    const double l2 = o.lambda() * o.lambda();
    std::vector<double> x{0.6, -1.4}, xi{-0.3, 0.9};
    cdouble product = eval_kernel(x, xi, o);
    double cross = 0.0, cx = 0.0, cxi = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        cross += x[k] * xi[k] * o.csc(k);
        cx += o.chirp_rate(k) * x[k] * x[k];
        cxi += o.chirp_rate(k) * xi[k] * xi[k];
    }
    cdouble factored = o.front_factor() / (2.0 * kPi) * std::polar(1.0, l2 * cx) *
                       std::polar(1.0, l2 * cxi) * std::polar(1.0, -l2 * cross);
    CHECK(std::abs(product - factored) <= 1e-12 * std::abs(product));
}

TEST_CASE("direct transform of the Gaussian at the classical order") {
    Grid g({12.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    FracOrder o({kPi / 2}, 1.0);
    Spectrum F = frft_direct(f, o, induced_spectral_grid(g, o));
    double worst = 0.0;
    const double c = std::pow(kPi, -0.25);
    for (std::size_t i = 0; i < F.field.size(); ++i) {
        double xi = F.field.grid().coord(0, i);
        worst = std::max(worst, std::abs(F.field[i] - c * std::exp(-0.5 * xi * xi)));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("direct transform linearity and zero field") {
    Grid g({6.0}, {32});
    FracOrder o({0.9}, 1.1);
    Grid out = induced_spectral_grid(g, o);
    SampledField f = sample(Generator::hermite_superposition(1, 5), g);
    SampledField h = sample(Generator::hermite_superposition(1, 6), g);
    std::vector<cdouble> combo(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) combo[i] = 2.0 * f[i] + 3.0 * h[i];
    Spectrum Fc = frft_direct(SampledField(g, combo), o, out);
    Spectrum Ff = frft_direct(f, o, out);
    Spectrum Fh = frft_direct(h, o, out);
    double worst = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
        worst = std::max(worst, std::abs(Fc.field[i] - 2.0 * Ff.field[i] - 3.0 * Fh.field[i]));
    CHECK(worst <= 1e-12);

    Spectrum Fz = frft_direct(SampledField::zeros(g), o, out);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(Fz.field[i] == cdouble(0.0));
}

TEST_CASE("fast path agrees with the direct oracle") {
    Grid g({10.0}, {128});
    SampledField f = normalize(sample(Generator::hermite_superposition(1, 31), g));
    for (auto [alpha, lam] : {std::pair{kPi / 2, 1.0}, {2.0 * kPi / 5, 1.2},
                              {-kPi / 3, 0.7}, {0.35, 2.0}}) {
        FracOrder o({alpha}, lam);
        Spectrum fast = frft_fast(f, o);
        Spectrum direct = frft_direct(f, o, fast.field.grid());
        CHECK(rel_l2_diff(fast.field, direct.field) <= 1e-9);
    }
}

TEST_CASE("induced grid spacing at the classical order") {
    Grid g({10.0}, {128});
    FracOrder o({kPi / 2}, 1.0);
    Grid out = induced_spectral_grid(g, o);
    CHECK(out.spacing(0) ==
          doctest::Approx(2.0 * kPi / (128.0 * g.spacing(0))).epsilon(1e-14));
}

TEST_CASE("classical order matches a reference DFT pipeline") {
    Grid g({10.0}, {64});
    SampledField f = normalize(sample(Generator::gabor({0.0}, {1.2}, {0.8}), g));
    FracOrder o({kPi / 2}, 1.0);
    Spectrum fast = frft_fast(f, o);
    const Grid& out = fast.field.grid();
    double worst = 0.0;
    for (std::size_t m = 0; m < out.size(); ++m) {
        double xi = out.coord(0, m);
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j)
            acc += f[j] * std::polar(1.0, -xi * g.coord(0, j));
        acc *= g.spacing(0) / std::sqrt(2.0 * kPi);
        worst = std::max(worst, std::abs(fast.field[m] - acc));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("two-dimensional separability") {
    Grid g1({8.0}, {64});
    Grid g2({8.0, 8.0}, {64, 64});
    Generator gx = Generator::gaussian({0.3}, {1.0});
    Generator gy = Generator::hermite1({0.0}, {1.2});
    SampledField fx = sample(gx, g1);
    SampledField fy = sample(gy, g1);
    std::vector<cdouble> prod(g2.size());
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j) prod[i * 64 + j] = fx[i] * fy[j];

    FracOrder o1a({kPi / 4}, 1.3), o1b({2.0 * kPi / 5}, 1.3);
    FracOrder o2({kPi / 4, 2.0 * kPi / 5}, 1.3);
    Spectrum F2 = frft_fast(SampledField(g2, prod), o2);
    Spectrum Fx = frft_fast(fx, o1a);
    Spectrum Fy = frft_fast(fy, o1b);
    double worst = 0.0;
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j)
            worst = std::max(worst,
                             std::abs(F2.field[i * 64 + j] - Fx.field[i] * Fy.field[j]));
    CHECK(worst <= 1e-10);
}

TEST_CASE("round trips") {
    Grid g({12.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    FracOrder o({kPi / 3}, 1.0);
    SampledField back = ifrft(frft_fast(f, o), o);
    CHECK(back.grid().same_geometry(g));
    CHECK(rel_l2_diff(back, f) <= 1e-6);

    Grid g2({9.0, 9.0}, {64, 64});
    SampledField f2 = normalize(sample(
        Generator::gaussian({0.2, -0.4}, {1.0, 1.4}), g2));
    FracOrder o2({kPi / 4, 2.0 * kPi / 5}, 1.3);
    SampledField back2 = ifrft(frft_fast(f2, o2), o2);
    CHECK(rel_l2_diff(back2, f2) <= 1e-5);

    Spectrum Fz = frft_fast(SampledField::zeros(g), o);
    SampledField z = ifrft(Fz, o);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(z[i]) == 0.0);
}

TEST_CASE("ifrft rejects a mismatched order") {
    Grid g({8.0}, {64});
    SampledField f = sample(Generator::gaussian({0.0}, {1.0}), g);
    FracOrder o({kPi / 3}, 1.0);
    Spectrum F = frft_fast(f, o);
    CHECK_THROWS_AS(ifrft(F, FracOrder({kPi / 4}, 1.0)), Error);
}

TEST_CASE("parseval residual") {
    Grid g({12.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    FracOrder o({kPi / 3}, 1.0);
    CHECK(parseval_residual(f, f, o) <= 1e-6);

    SampledField z = SampledField::zeros(g);
    CHECK(parseval_residual(z, z, o) == 0.0);

    Grid g2({8.0, 8.0}, {32, 32});
    SampledField a = sample(Generator::hermite_superposition(2, 3), g2);
    SampledField b = sample(Generator::hermite_superposition(2, 4), g2);
    CHECK(parseval_residual(a, b, FracOrder({0.9, -1.2}, 1.4)) <= 1e-5);
}

TEST_CASE("unitarity for decaying smooth fields") {
    Grid g({14.0}, {256});
    SampledField f = normalize(sample(Generator::hermite_superposition(1, 77), g));
    for (auto [alpha, lam] : {std::pair{1.1, 0.8}, {2.0 * kPi / 5, 1.2}}) {
        Spectrum F = frft_fast(f, FracOrder({alpha}, lam));
        CHECK(std::abs(l2_norm(F.field) - 1.0) <= 1e-6);
    }
}

TEST_CASE("chirp sampling warning") {
    WarningCounter counter;
    Grid g({16.0}, {64}); // coarse spacing, strong chirp
    SampledField f = sample(Generator::gaussian({0.0}, {1.0}), g);
    FracOrder o({0.32}, 2.0);
    CHECK(chirp_sampling_margin(g, o) > kPi / 4.0);
    frft_fast(f, o);
    CHECK(WarningCounter::count >= 1);

    WarningCounter::count = 0;
    FracOrder mild({kPi / 2}, 1.0);
    frft_fast(f, mild);
    CHECK(WarningCounter::count == 0);
}
