#include <doctest.h>

#include <cmath>

#include "fracwave/grid.hpp"
#include "fracwave/signals.hpp"

using namespace fracwave;

namespace {
SampledField constant_field(const Grid& g, cdouble v) {
    return SampledField(g, std::vector<cdouble>(g.size(), v));
}
} // namespace

TEST_CASE("grid points and spacing") {
    Grid g({2.0}, {4});
    CHECK(g.spacing(0) == doctest::Approx(1.0));
    CHECK(g.coord(0, 0) == doctest::Approx(-2.0));
    CHECK(g.coord(0, 1) == doctest::Approx(-1.0));
    CHECK(g.coord(0, 2) == doctest::Approx(0.0));
    CHECK(g.coord(0, 3) == doctest::Approx(1.0));

    Grid g2({1.0, 1.0}, {2, 2});
    CHECK(g2.size() == 4);
    CHECK(g2.point(0) == std::vector<double>{-1.0, -1.0});
    CHECK(g2.point(1) == std::vector<double>{-1.0, 0.0});
    CHECK(g2.point(2) == std::vector<double>{0.0, -1.0});
    CHECK(g2.point(3) == std::vector<double>{0.0, 0.0});

    Grid g3({10.0}, {256});
    CHECK(g3.spacing(0) == doctest::Approx(0.078125).epsilon(1e-15));
}

TEST_CASE("grid rejects bad parameters") {
    CHECK_THROWS_AS(Grid({1.0}, {3}), Error);   // odd
    CHECK_THROWS_AS(Grid({-1.0}, {4}), Error);  // nonpositive extent
    CHECK_THROWS_AS(Grid({1.0}, {0}), Error);
    CHECK_THROWS_AS(Grid({}, {}), Error);
}

TEST_CASE("inner product basics") {
    Grid g({1.0}, {4});
    SampledField one = constant_field(g, 1.0);
    CHECK(inner_product(one, one).real() == doctest::Approx(2.0));

    // odd/even orthogonality with a decaying even envelope
    Grid gr({10.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), gr));
    std::vector<cdouble> tv(gr.size());
    for (std::size_t i = 0; i < gr.size(); ++i) tv[i] = gr.coord(0, i) * f[i];
    CHECK(std::abs(inner_product(f, SampledField(gr, tv))) < 1e-12);

    CHECK(std::abs(inner_product(f, f).real() - 1.0) < 1e-10); // Gaussian integral oracle

    Grid other({2.0}, {4});
    CHECK_THROWS_AS(inner_product(one, constant_field(other, 1.0)), Error);
}

TEST_CASE("l2 norm") {
    Grid g({1.0}, {4});
    CHECK(l2_norm(SampledField::zeros(g)) == doctest::Approx(0.0));
    CHECK(l2_norm(constant_field(g, 1.0)) == doctest::Approx(std::sqrt(2.0)));
    Grid gr({10.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.0}), gr));
    CHECK(l2_norm(f) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("inner product is conjugate symmetric and linear") {
    Grid g({8.0}, {64});
    SampledField f = sample(Generator::hermite_superposition(1, 11), g);
    SampledField h = sample(Generator::hermite_superposition(1, 12), g);
    cdouble fh = inner_product(f, h);
    cdouble hf = inner_product(h, f);
    CHECK(std::abs(fh - std::conj(hf)) <= 1e-14 * std::abs(fh));

    cdouble a(2.0, -1.0);
    std::vector<cdouble> combo(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) combo[i] = a * f[i] + h[i];
    cdouble lhs = inner_product(SampledField(g, combo), h);
    cdouble rhs = a * fh + inner_product(h, h);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
}

TEST_CASE("second moment centered for even modulus") {
    Grid g({16.0}, {256});
    SampledField f = normalize(sample(Generator::gaussian({0.0}, {1.3}), g));
    double first_moment = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        first_moment += g.coord(0, i) * std::norm(f[i]);
    first_moment *= g.cell_volume();
    CHECK(std::abs(first_moment) < 1e-12);
}

TEST_CASE("scale grid construction") {
    ScaleGrid s(1, 1.0, 4.0, 3, false);
    REQUIRE(s.size() == 3);
    CHECK(s.point(0)[0] == doctest::Approx(1.0));
    CHECK(s.point(1)[0] == doctest::Approx(2.0));
    CHECK(s.point(2)[0] == doctest::Approx(4.0));

    ScaleGrid sg(1, 1.0, 4.0, 3, true);
    REQUIRE(sg.size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(sg.point(i)[0] == doctest::Approx(-sg.point(5 - i)[0]));
        CHECK(sg.weight_inv_square(i) == doctest::Approx(sg.weight_inv_square(5 - i)));
    }

    CHECK_THROWS_AS(ScaleGrid(1, 0.0, 4.0, 3, false), Error);
    CHECK_THROWS_AS(ScaleGrid(1, 2.0, 1.0, 3, false), Error);
    CHECK_THROWS_AS(ScaleGrid(1, 1.0, 4.0, 1, false), Error);
}

TEST_CASE("scale weights approximate the inverse-square measure") {
    auto weight_sum = [](std::size_t count) {
        ScaleGrid s(1, 0.25, 4.0, count, false);
        double acc = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) acc += s.weight_inv_square(i);
        return acc;
    };
    const double exact = 1.0 / 0.25 - 1.0 / 4.0; // 3.75
    double e33 = std::abs(weight_sum(33) - exact);
    CHECK(e33 <= 0.02 * exact);
    double e66 = std::abs(weight_sum(66) - exact);
    CHECK(e66 <= 0.6 * e33); // at least first-order convergence
}

TEST_CASE("signed scale weights cover both measure exponents") {
    ScaleGrid s(2, 0.5, 2.0, 4, true);
    CHECK(s.dims() == 2);
    CHECK(s.size() == 64);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s.point(i);
        // w2 carries one more 1/|a_k| per axis than w1
        CHECK(s.weight_inv_square(i) ==
              doctest::Approx(s.weight_inv_abs(i) / std::abs(p[0] * p[1])).epsilon(1e-12));
        CHECK(s.weight_inv_square(i) > 0.0);
        CHECK(s.weight_inv_abs(i) > 0.0);
    }
}

TEST_CASE("field validation") {
    Grid g({1.0}, {4});
    CHECK_THROWS_AS(SampledField(g, std::vector<cdouble>(3)), Error);
    std::vector<cdouble> bad(4, 0.0);
    bad[2] = cdouble(std::nan(""), 0.0);
    CHECK_THROWS_AS(SampledField(g, bad), Error);
}
