#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracwave/uncertainty.hpp"

using namespace fracwave;

namespace {
const double kPi = std::numbers::pi;
const double kEulerGamma = 0.57721566490153286;

FracOrder ref_order() { return FracOrder({2.0 * kPi / 5}, 1.2); }
Generator ref_wavelet() { return Generator::hermite1({0.0}, {1.0}); }
} // namespace

TEST_CASE("digamma against closed forms") {
    CHECK(std::abs(digamma(1.0) + kEulerGamma) <= 1e-12);
    CHECK(std::abs(digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)) <= 1e-12);
    // psi(1/4) = -gamma - 3 ln 2 - pi/2
    double expect = -kEulerGamma - 3.0 * std::log(2.0) - kPi / 2.0;
    CHECK(std::abs(digamma(0.25) - expect) <= 1e-10);
    // D for N=1
    double D = digamma(0.25) - std::log(2.0);
    CHECK(D == doctest::Approx(-4.9206007139362).epsilon(1e-10));
}

TEST_CASE("dispersion of the normalized Gaussian") {
    Grid g({12.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    CHECK(std::abs(dispersion2(f) - 0.5) <= 1e-8);
    CHECK(dispersion2(SampledField::zeros(g)) == 0.0);

    SampledField shifted = normalize(sample(Generator::gaussian({0.5}, {1.0}), g));
    CHECK(dispersion2(shifted) > dispersion2(f));
}

TEST_CASE("origin cell log average") {
    Grid g({8.0}, {64});
    // N=1 closed form: (1/Delta) int_{-D/2}^{D/2} ln|x| dx = ln(Delta/2) - 1
    double exact = std::log(g.spacing(0) / 2.0) - 1.0;
    CHECK(std::abs(origin_cell_log_average(g) - exact) <= 0.05 * std::abs(exact));
}

TEST_CASE("heisenberg at the classical order is sharp on the Gaussian") {
    Grid g({12.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    UncertaintyReport rep = heisenberg_mfrft(f, FracOrder({kPi / 2}, 1.0));
    CHECK(rep.lhs == doctest::Approx(0.25).epsilon(0.01));
    CHECK(rep.rhs == doctest::Approx(0.25).epsilon(0.01));
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(0.01));
    CHECK(rep.satisfied);
}

TEST_CASE("heisenberg holds across a random family at the reference order") {
    Grid g({16.0}, {256});
    FracOrder o = ref_order();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SampledField f = normalize(sample(Generator::hermite_superposition(1, seed), g));
        UncertaintyReport rep = heisenberg_mfrft(f, o);
        CHECK(rep.ratio >= 1.0 - 1e-9);
    }
}

TEST_CASE("the Gaussian minimizes the classical heisenberg ratio over the family") {
    Grid g({14.0}, {256});
    FracOrder classical({kPi / 2}, 1.0);
    double gauss_ratio =
        heisenberg_mfrft(normalize(sample(Generator::gaussian({0.0}, {1.0}), g)), classical).ratio;
    CHECK(std::abs(gauss_ratio - 1.0) <= 0.01);
    for (std::uint64_t seed = 60; seed < 90; ++seed) {
        SampledField f = normalize(sample(Generator::hermite_superposition(1, seed), g));
        CHECK(heisenberg_mfrft(f, classical).ratio >= gauss_ratio - 1e-6);
    }
}

TEST_CASE("heisenberg ratio is scale invariant") {
    Grid g({14.0}, {256});
    SampledField f = normalize(sample(Generator::hermite_superposition(1, 8), g));
    FracOrder o = ref_order();
    UncertaintyReport r1 = heisenberg_mfrft(f, o);
    std::vector<cdouble> scaled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) scaled[i] = 3.0 * f[i];
    UncertaintyReport r3 = heisenberg_mfrft(SampledField(g, scaled), o);
    CHECK(r3.ratio == doctest::Approx(r1.ratio).epsilon(1e-12));
}

TEST_CASE("time-side dispersion equals at opposite orders for real signals") {
    Grid g({14.0}, {256});
    SampledField f = normalize(sample(Generator::hermite_superposition(1, 4), g));
    FracOrder o = ref_order();
    UncertaintyReport a = heisenberg_mfrft(f, o);
    UncertaintyReport b = heisenberg_mfrft(f, o.negated());
    CHECK(std::abs(a.lhs - b.lhs) <= 1e-8 * std::abs(a.lhs));
}

TEST_CASE("wavelet heisenberg at a reduced configuration") {
    Grid g({16.0}, {128});
    FracOrder o = ref_order();
    ScaleGrid scales(1, 0.125, 8.0, 16, true);
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    UncertaintyReport rep = heisenberg_mfrwt(f, ref_wavelet(), scales, o);
    CHECK(rep.satisfied);
    CHECK(rep.ratio >= 1.0);
    CHECK(rep.constants.count("rhs_norm2_variant") == 1);

    std::vector<cdouble> doubled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) doubled[i] = 2.0 * f[i];
    UncertaintyReport rep2 = heisenberg_mfrwt(SampledField(g, doubled), ref_wavelet(), scales, o);
    CHECK(rep2.ratio == doctest::Approx(rep.ratio).epsilon(1e-10));

    UncertaintyReport zero = heisenberg_mfrwt(SampledField::zeros(g), ref_wavelet(), scales, o);
    CHECK(zero.satisfied);
}

TEST_CASE("logarithmic inequality for the transform") {
    Grid g({12.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    FracOrder classical({kPi / 2}, 1.0);
    UncertaintyReport rep = log_uncertainty_mfrft(f, classical);
    CHECK(rep.constants.at("Pprime") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.satisfied);

    std::vector<cdouble> doubled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) doubled[i] = 2.0 * f[i];
    UncertaintyReport rep2 = log_uncertainty_mfrft(SampledField(g, doubled), classical);
    CHECK(rep2.lhs == doctest::Approx(4.0 * rep.lhs).epsilon(1e-10));
    CHECK(rep2.rhs == doctest::Approx(4.0 * rep.rhs).epsilon(1e-10));
}

TEST_CASE("logarithmic inequality for the wavelet transform") {
    Grid g({16.0}, {128});
    FracOrder o = ref_order();
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));
    ScaleGrid scales(1, 0.125, 8.0, 16, true);
    UncertaintyReport rep = log_uncertainty_mfrwt(f, ref_wavelet(), scales, o);
    CHECK(rep.satisfied);

    UncertaintyReport zero = log_uncertainty_mfrwt(SampledField::zeros(g), ref_wavelet(), scales, o);
    CHECK(zero.satisfied);

    // widening the scale coverage does not flip satisfaction
    ScaleGrid wide(1, 0.0625, 16.0, 32, true);
    UncertaintyReport rep2 = log_uncertainty_mfrwt(f, ref_wavelet(), wide, o);
    CHECK(rep2.satisfied == rep.satisfied);
}

TEST_CASE("local inequality ratio") {
    Grid g({12.0}, {256});
    FracOrder o = ref_order();
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), g));

    // K covering the full spectral grid: numerator is ||f||^2 by Parseval
    Spectrum F = frft_fast(f, o);
    double xl = F.field.grid().half_extent(0);
    Region full{{Box{{-2.0 * xl}, {2.0 * xl}}}};
    UncertaintyReport rep = local_uncertainty(f, o, full, 0.25);
    CHECK(std::isfinite(rep.ratio));
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-6));

    // quadratic scaling invariance
    std::vector<cdouble> doubled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) doubled[i] = 2.0 * f[i];
    Region K{{Box{{-1.0}, {1.0}}}};
    UncertaintyReport r1 = local_uncertainty(f, o, K, 0.25);
    UncertaintyReport r2 = local_uncertainty(SampledField(g, doubled), o, K, 0.25);
    CHECK(r2.ratio == doctest::Approx(r1.ratio).epsilon(1e-12));

    // shrinking K keeps the ratio bounded
    double sup = 0.0;
    for (double hw : {4.0, 2.0, 1.0, 0.5, 0.25}) {
        Region Kh{{Box{{-hw}, {hw}}}};
        sup = std::max(sup, local_uncertainty(f, o, Kh, 0.25).ratio);
    }
    CHECK(std::isfinite(sup));
    CHECK(sup < 100.0);

    CHECK_THROWS_AS(local_uncertainty(f, o, K, 0.5), Error);  // theta = N/2
    Region empty{{Box{{5.0}, {5.0}}}};
    CHECK_THROWS_AS(local_uncertainty(f, o, empty, 0.25), Error);
}

TEST_CASE("local inequality for the wavelet transform") {
    Grid g({16.0}, {128});
    FracOrder o = ref_order();
    ScaleGrid scales(1, 0.25, 4.0, 8, true);
    SampledField f = normalize(sample(Generator::hermite1({0.0}, {1.0}), g));
    Region K{{Box{{-1.0}, {1.0}}}};

    for (double theta : {0.25, 1.0}) {
        UncertaintyReport rep = local_uncertainty_mfrwt(f, ref_wavelet(), scales, o, K, theta);
        CHECK(std::isfinite(rep.ratio));
        CHECK(rep.constants.count("wavelet_side") == 1);
        CHECK(rep.constants.count("signal_side_times_C") == 1);
    }

    UncertaintyReport zero =
        local_uncertainty_mfrwt(SampledField::zeros(g), ref_wavelet(), scales, o, K, 0.25);
    CHECK(zero.lhs == 0.0);

    // quadratic scaling invariance of the ratio
    std::vector<cdouble> doubled(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) doubled[i] = 2.0 * f[i];
    UncertaintyReport r1 = local_uncertainty_mfrwt(f, ref_wavelet(), scales, o, K, 0.25);
    UncertaintyReport r2 =
        local_uncertainty_mfrwt(SampledField(g, doubled), ref_wavelet(), scales, o, K, 0.25);
    CHECK(r2.ratio == doctest::Approx(r1.ratio).epsilon(1e-10));
}

TEST_CASE("tail check rejects non-decaying fields") {
    Grid g({2.0}, {64});
    SampledField box(g, std::vector<cdouble>(g.size(), 1.0)); // energy on the boundary
    CHECK_THROWS_AS(log_uncertainty_mfrft(box, ref_order()), Error);
}
