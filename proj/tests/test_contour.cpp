#include <doctest.h>

#include <cmath>
#include <random>

#include "gnfam/closed_forms.hpp"
#include "gnfam/contour.hpp"
#include "gnfam/hyp2f1.hpp"
#include "gnfam/series.hpp"
#include "oracles.hpp"

using namespace gnfam;
using oracles::Complex;

namespace {
double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

TEST_CASE("s_map") {
    CHECK(std::abs(s_map(0.1, 2.0) - Complex(2.5)) < 1e-15);
    CHECK_THROWS_AS(s_map(0.3, 1.0), PoleError);
    CHECK_THROWS_AS(s_map(0.5, 2.0), PoleError);  // t = 1/a

    // S(a;t) = S(a;1/(at)) and S(a;t) = (1/a) S(1/a;1/t)
    std::mt19937_64 rng(42);
    for (int it = 0; it < 1000; ++it) {
        Complex a(uniform(rng, -2, 2), uniform(rng, -2, 2));
        Complex t(uniform(rng, -3, 3), uniform(rng, -3, 3));
        if (std::abs(a) < 0.05 || std::abs(t - 1.0) < 0.05 ||
            std::abs(1.0 - a * t) < 0.05 || std::abs(t) < 0.05)
            continue;
        Complex s = s_map(a, t);
        CHECK(std::abs(s_map(a, 1.0 / (a * t)) - s) <= 1e-12 * std::abs(s));
        CHECK(std::abs(s_map(1.0 / a, 1.0 / t) / a - s) <= 1e-12 * std::abs(s));
    }
}

TEST_CASE("s_map_multi") {
    Complex a1[] = {Complex(0.3)};
    Complex t1[] = {Complex(2.0)};
    CHECK(s_map_multi(a1, t1) == s_map(0.3, 2.0));

    Complex a2[] = {Complex(0.1), Complex(0.2)};
    Complex t2[] = {Complex(2.0), Complex(3.0)};
    CHECK(std::abs(s_map_multi(a2, t2) - Complex(8.0)) < 1e-13);

    // a = 0 degenerates to nested t/(t-1) maps
    Complex a3[] = {Complex(0.0), Complex(0.0), Complex(0.0)};
    Complex t3[] = {Complex(2.0), Complex(3.0), Complex(5.0)};
    CHECK(std::abs(s_map_multi(a3, t3) - Complex(2.0)) < 1e-13);  // inner chains scale by 0

    // against the defining recursion, vector-built
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        std::vector<Complex> a(3), t(3);
        for (int j = 0; j < 3; ++j) {
            a[static_cast<size_t>(j)] = Complex(uniform(rng, 0.05, 0.5), uniform(rng, -0.2, 0.2));
            t[static_cast<size_t>(j)] = Complex(uniform(rng, 1.6, 3.0), uniform(rng, -0.5, 0.5));
        }
        Complex inner = s_map(a[2], t[2]);
        std::vector<Complex> a_scaled{inner * a[0], inner * a[1]};
        std::vector<Complex> t_head{t[0], t[1]};
        Complex expect = s_map_multi(a_scaled, t_head);
        Complex got = s_map_multi(a, t);
        CHECK(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("contour_integral residues") {
    ContourSpec c{Complex(1.0), 0.5, 16};
    auto r1 = contour_integral([](Complex t) { return 1.0 / (t - 1.0); }, c, 1e-12);
    CHECK(std::abs(r1.value - Complex(1.0)) < 1e-12);

    auto r2 = contour_integral(
        [](Complex t) { return 1.0 / ((t - 1.0) * (1.0 - 0.5 * t)); }, c, 1e-12);
    CHECK(std::abs(r2.value - Complex(2.0)) < 1e-11);

    auto r3 = contour_integral(
        [](Complex t) { return 1.0 / ((t - 1.0) * (1.0 - 0.5 * t)) + 1.0 / t; }, c, 1e-12);
    CHECK(std::abs(r3.value - Complex(2.0)) < 1e-11);
}

TEST_CASE("trapezoid error at least squares under node doubling") {
    ContourSpec c{Complex(1.0), 0.5, 16};
    auto f = [](Complex t) { return 1.0 / ((t - 1.0) * (1.0 - 0.8 * t)); };
    Complex exact(1.0 / (1.0 - 0.8), 0.0);
    double e16 = std::abs(contour_trapezoid(f, c, 16) - exact);
    double e32 = std::abs(contour_trapezoid(f, c, 32) - exact);
    double e64 = std::abs(contour_trapezoid(f, c, 64) - exact);
    CHECK(e32 <= 10.0 * e16 * e16 + 1e-15);
    CHECK(e64 <= 10.0 * e32 * e32 + 1e-15);
}

TEST_CASE("gn_via_recursion against closed forms and series") {
    ContourSpec c{Complex(1.0), 0.5, 64};

    Evaluation e2 = gn_via_recursion(CPoint{0.1, 0.1}, base_g1(), c, 1e-11);
    CHECK(std::abs(e2.value - Complex(oracles::kG2_01_01)) < 1e-8 * oracles::kG2_01_01);
    CHECK(e2.terms_used <= 2048);

    Evaluation e3 = gn_via_recursion(CPoint{0.05, 0.05, 0.05}, base_g2(), c, 1e-11);
    CHECK(std::abs(e3.value - Complex(oracles::kG3_005)) < 1e-8 * oracles::kG3_005);

    CPoint x4{0.02, 0.02, 0.02, 0.02};
    Evaluation e4 = gn_via_recursion(x4, base_g3(), c, 1e-11);
    Complex series = eval_gn_series(x4).value;
    CHECK(std::abs(e4.value - series) < 1e-7 * std::abs(series));

    // complex point
    CPoint xc{Complex(0.06, 0.02), Complex(0.05, -0.01)};
    Evaluation ec = gn_via_recursion(xc, base_g1(), c, 1e-11);
    CHECK(std::abs(ec.value - g2(xc.x(1), xc.x(2))) < 1e-9 * std::abs(ec.value));

    // the domain guard rejects points whose mapped arguments leave the base domain
    CHECK_THROWS_AS(gn_via_recursion(CPoint{0.3, 0.3, 0.3}, base_g2(), c, 1e-10), DomainError);
}

TEST_CASE("contour independence within [0.3, 0.6]") {
    Complex ref;
    for (double r : {0.3, 0.45, 0.6}) {
        ContourSpec c{Complex(1.0), r, 64};
        Complex v = gn_via_recursion(CPoint{0.1, 0.1}, base_g1(), c, 1e-12).value;
        if (r == 0.3)
            ref = v;
        else
            CHECK(std::abs(v - ref) < 1e-9);
    }
}

TEST_CASE("gn_via_multicontour") {
    ContourSpec c{Complex(1.0), 0.5, 16};
    Evaluation e1 = gn_via_multicontour(CPoint{0.5}, c, 1e-10);
    CHECK(std::abs(e1.value - Complex(2.0)) < 1e-7);

    Evaluation e2 = gn_via_multicontour(CPoint{0.1, 0.1}, c, 1e-9);
    CHECK(std::abs(e2.value - Complex(oracles::kG2_01_01)) < 1e-7 * oracles::kG2_01_01);

    Evaluation e3 = gn_via_multicontour(CPoint{0.05, 0.05, 0.05}, c, 1e-8);
    CHECK(std::abs(e3.value - Complex(oracles::kG3_005)) < 1e-6 * oracles::kG3_005);

    CHECK_THROWS_AS(gn_via_multicontour(CPoint{0.02, 0.02, 0.02, 0.02}, c, 1e-8),
                    UnsupportedDimensionError);
}

TEST_CASE("recursion and multicontour agree with the series") {
    ContourSpec c{Complex(1.0), 0.5, 64};
    for (const CPoint& x : {CPoint{0.08, 0.03}, CPoint{0.02, 0.11}}) {
        Complex s = eval_gn_series(x).value;
        Complex r = gn_via_recursion(x, base_g1(), c, 1e-11).value;
        Complex m = gn_via_multicontour(x, c, 1e-9).value;
        CHECK(std::abs(s - r) < 1e-8 * std::abs(s));
        CHECK(std::abs(s - m) < 1e-7 * std::abs(s));
        CHECK(std::abs(r - m) < 1e-7 * std::abs(s));
    }
}

TEST_CASE("kernel_via_contour") {
    ContourSpec c{Complex(1.0), 0.5, 128};
    Evaluation k0 = kernel_via_contour(0.2, 0.0, c, 1e-10);
    CHECK(std::abs(k0.value - Complex(1.25)) < 1e-9);

    Evaluation k1 = kernel_via_contour(0.2, 1.0, c, 1e-10);
    Complex ref1 = hyp2f1(2.0, 2.0, 1.0, 0.2);
    CHECK(std::abs(k1.value - ref1) < 1e-8 * std::abs(ref1));

    Evaluation k2 = kernel_via_contour(0.1, 1.5, c, 1e-10);
    Complex ref2 = kernel_K(0.1, 1.5).value;
    CHECK(std::abs(k2.value - ref2) < 1e-8 * std::abs(ref2));

    Evaluation k3 = kernel_via_contour(Complex(0.15, 0.2), Complex(2.0, 1.0), c, 1e-10);
    Complex ref3 = kernel_K(Complex(0.15, 0.2), Complex(2.0, 1.0)).value;
    CHECK(std::abs(k3.value - ref3) < 1e-8 * std::abs(ref3));

    CHECK_THROWS_AS(kernel_via_contour(0.9, 0.5, c, 1e-10), DomainError);  // 1/u inside
    CHECK_THROWS_AS(kernel_via_contour(1.2, 0.5, c, 1e-10), DomainError);
}
