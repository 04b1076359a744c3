#include <doctest.h>

#include <cmath>

#include "gnfam/series.hpp"
#include "oracles.hpp"

using namespace gnfam;
using oracles::Complex;

TEST_CASE("multi-index basics") {
    CHECK(MultiIndex({0, 0, 0}).total() == 0);
    CHECK(MultiIndex({2, 1, 1}).total() == 4);
    CHECK(MultiIndex({3, 2}).factorial_product() == BigInt(12));
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
}

TEST_CASE("gn_coefficient") {
    CHECK(gn_coefficient(MultiIndex({0, 0, 0})) == BigInt(1));
    CHECK(gn_coefficient(MultiIndex({1, 1})) == BigInt(4));
    CHECK(gn_coefficient(MultiIndex({2, 1, 1})) == BigInt(144));
    // (20!/(10!10!))^2 fits only in big integers
    BigInt c = gn_coefficient(MultiIndex({10, 10}));
    CHECK(c == BigInt(184756) * BigInt(184756));
}

TEST_CASE("in_omega_n") {
    CHECK(in_omega_n(CPoint{0.1, 0.1}));
    CHECK_FALSE(in_omega_n(CPoint{0.25, 0.25}));  // boundary, strictly excluded
    CHECK(in_omega_n(CPoint{0.0, 0.0, 0.0}));
    CHECK(in_omega_n(CPoint{Complex(0.0, 0.3), 0.2}));  // moduli enter, 0.995 < 1
    CHECK_FALSE(in_omega_n(CPoint{Complex(0.0, 0.4), 0.2}));
}

TEST_CASE("eval_gn_series point values") {
    CHECK(eval_gn_series(CPoint{0.5}).value.real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(eval_gn_series(CPoint{0.1, 0.1}).value - Complex(oracles::kG2_01_01)) < 1e-12);
    CHECK(std::abs(eval_gn_series(CPoint{0.05, 0.05, 0.05}).value - Complex(oracles::kG3_005)) <
          1e-11);
    CHECK_THROWS_AS(eval_gn_series(CPoint{0.3, 0.3, 0.3}), DomainError);
}

TEST_CASE("shell symmetry and restriction") {
    Complex a = eval_gn_series(CPoint{0.07, 0.02, 0.11}).value;
    Complex b = eval_gn_series(CPoint{0.11, 0.07, 0.02}).value;
    CHECK(std::abs(a - b) < 1e-14 * std::abs(a));

    // x_n = 0 collapses to the lower-dimensional series, shell by shell.
    TruncationSpec t{40, 1e-15, 10'000'000};
    Evaluation low = eval_gn_series(CPoint{0.08, 0.05}, t);
    Evaluation lifted = eval_gn_series(CPoint{0.08, 0.05, 0.0}, t);
    CHECK(lifted.value == low.value);
    CHECK(lifted.degree_reached == low.degree_reached);
}

TEST_CASE("tail estimate bounds a twice-deeper truncation") {
    for (const CPoint& x : {CPoint{0.1, 0.1}, CPoint{0.15, 0.05}, CPoint{0.05, 0.05, 0.05}}) {
        TruncationSpec shallow{24, 0.0, 10'000'000};
        TruncationSpec deep{48, 0.0, 10'000'000};
        Evaluation e1 = eval_gn_series(x, shallow);
        Evaluation e2 = eval_gn_series(x, deep);
        CHECK(std::abs(e2.value - e1.value) <= e1.error_estimate);
        CHECK(std::abs(e2.value - e1.value) > 0.0);  // estimate is not vacuous
    }
}

TEST_CASE("F_C series") {
    // unit parameters reproduce G_n
    Complex fc = eval_fc_series(1.0, 1.0, {1.0, 1.0}, CPoint{0.1, 0.1}).value;
    Complex gn = eval_gn_series(CPoint{0.1, 0.1}).value;
    CHECK(std::abs(fc - gn) < 1e-12);

    CHECK(eval_fc_series(0.3, 2.7, {1.5}, CPoint{0.0}).value == Complex(1.0));

    // n = 1, gamma = 2: sum x^l/(l+1) = -log(1-x)/x
    Complex v = eval_fc_series(1.0, 1.0, {2.0}, CPoint{0.5}).value;
    CHECK(std::abs(v - Complex(oracles::kTwoLn2)) < 1e-12);

    CHECK_THROWS_AS(eval_fc_series(1.0, 1.0, {0.0}, CPoint{0.1}), ParameterError);
    CHECK_THROWS_AS(eval_fc_series(1.0, 1.0, {-2.0}, CPoint{0.1}), ParameterError);
    TruncationSpec starved{120, 1e-13, 10};
    CHECK_THROWS_AS(eval_fc_series(1.0, 1.0, {1.0, 1.0}, CPoint{0.1, 0.1}, starved),
                    ConvergenceError);
}

TEST_CASE("F_4 series") {
    CHECK(std::abs(eval_f4_series(1, 1, 1, 1, 0.1, 0.1).value - Complex(oracles::kG2_01_01)) <
          1e-11);
    CHECK(eval_f4_series(0.3, 0.7, 1.1, 0.9, 0.0, 0.0).value == Complex(1.0));

    Complex mine = eval_f4_series(1, 1, 1, 1, 0.05, 0.02).value;
    Complex brute = oracles::bf_f4(1, 1, 1, 1, 0.05, 0.02);
    CHECK(std::abs(mine - brute) < 1e-10);

    Complex generic = eval_f4_series(0.7, 0.3, 1.2, 0.9, 0.04, 0.03).value;
    CHECK(std::abs(generic - oracles::bf_f4(0.7, 0.3, 1.2, 0.9, 0.04, 0.03)) < 1e-10);
}

TEST_CASE("F_1 and F_2 series") {
    Complex f1 = eval_f1_series(1.0, {0.5, 0.5}, 1.0, 0.1, 0.2).value;
    CHECK(std::abs(f1 - Complex(oracles::kInvSqrt072)) < 1e-12);

    CHECK(eval_f2_series(1.0, {1.0, 0.5}, {1.0, 1.0}, 0.0, 0.0).value == Complex(1.0));

    // F_2(a,(b,b'),(g,a);x1,x2) = (1-x2)^(-b') F_1(b,(a-b',b'),g;x1,x1/(1-x2))
    Complex lhs = eval_f2_series(1.0, {1.0, 0.5}, {1.0, 1.0}, 0.05, 0.1).value;
    Complex rhs = std::pow(0.9, -0.5) *
                  eval_f1_series(1.0, {0.5, 0.5}, 1.0, 0.05, 0.05 / 0.9).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);

    CHECK(std::abs(lhs - oracles::bf_f2(1.0, 1.0, 0.5, 1.0, 1.0, 0.05, 0.1)) < 1e-10);
    CHECK(std::abs(f1 - oracles::bf_f1(1.0, 0.5, 0.5, 1.0, 0.1, 0.2)) < 1e-10);

    CHECK_THROWS_AS(eval_f2_series(1.0, {1.0, 0.5}, {1.0, 1.0}, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(eval_f1_series(1.0, {0.5, 0.5}, 1.0, 0.95, 0.1), DomainError);
}

TEST_CASE("exact PDE coefficient identities") {
    CHECK(check_pde_coefficients(1, 5).ok);
    CHECK(check_pde_coefficients(2, 12).ok);
    CHECK(check_pde_coefficients(3, 12).ok);
    CHECK(check_pde_coefficients(4, 8).ok);
}
