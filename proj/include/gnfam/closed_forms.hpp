#ifndef GNFAM_CLOSED_FORMS_HPP
#define GNFAM_CLOSED_FORMS_HPP

#include "gnfam/contour.hpp"
#include "gnfam/rational.hpp"
#include "gnfam/types.hpp"

namespace gnfam {

// G_1(x) = 1/(1-x).
Complex g1(Complex x);

// G_2(x) = 1/sqrt(Q_2(x)), principal branch off Q_2 in (-inf, 0].
Complex g2(Complex x1, Complex x2);

// G_3(x) = 2F1(1/4,3/4;1;u(x)) / sqrt(Q_3(x)), principal branches.
Complex g3(const CPoint& x);

// The quartic data behind the n = 3 Euler integral:
//   P(x;t) = ((1-t)(1-x3 t) + (x1+x2) t)^2 - 4 x1 x2 t^2
//          = x3^2 (t-t1)(t-t2)(t-t3)(t-t4),
// with a_pm = 1 - x1 - x2 + x3 pm 2 sqrt(x1 x2), lambda the cross-ratio of
// the roots and mu the normalizing factor of the Riemann normal form.
struct EllipticReduction {
    Complex a_plus{}, a_minus{};
    Complex t1{}, t2{}, t3{}, t4{};
    Complex Q{}, u{};
    Complex lambda{}, mu{};
};

EllipticReduction elliptic_reduction(const CPoint& x);

// The defining quartic P(x;t), for checking the factorization.
Complex elliptic_quartic(const CPoint& x, Complex t);

// G_3 evaluated as (i/pi) \int_0^1 dt'/sqrt(mu t'(1-t')(1-lambda t')), with
// i/sqrt(mu) resolved by the x -> 0 anchoring.
Evaluation g3_via_elliptic_integral(const CPoint& x, double tol = 1e-12);

// G_3(x) = sum_{k<=K} F_4(k+1,k+1,1,1,x1,x2) x3^k.
Evaluation g3_f4_expansion(const CPoint& x, int K, const TruncationSpec& trunc = {});

// Coefficients of the logarithmic-derivative form of d_t(t d_t F)/F for the
// ansatz F = phi(u)/sqrt(Q), t the var_index-th coordinate (1-based):
//   A2 = (1/t - 4 DQ + 4 t DQ^2) u^2
//   A1 = (1/t - 4t/Q - 7 DQ + 8 t DQ^2) u
//   A0 = -t/Q - DQ/2 + (3/4) t DQ^2,        DQ = d_t Q / Q.
struct ACoefficients {
    Complex a2{}, a1{}, a0{};
};

ACoefficients a_coefficients(int var_index, const CPoint& x);

// Exact rational forms of the two D_tQ identities used to reduce the Cauchy
// problem to an ODE (x = (x,y,z), all coordinates nonzero, Q != 0):
//   D_xQ - D_yQ = 4(x-y)/Q
//   x (D_xQ)^2 - y (D_yQ)^2 = 4(x-y)/Q + (x-y) u / (4xy)
bool lemma_dq_first(const RationalPoint& x);
bool lemma_dq_second(const RationalPoint& x);

// Exact rational form of the root-product relation
// (a_+^2 - 4x3)(a_-^2 - 4x3) = Q^2 (1 - u), with the sqrt(x1 x2) terms
// cleared via the product form:
//   (c^2 + 4p - 4x3)^2 - 16 c^2 p = Q^2 - 64 p x3,
// where c = 1 - x1 - x2 + x3 and p = x1 x2.
bool elliptic_product_identity(const RationalPoint& x);

// Left side of t(64t-1) psi' + t(64t-1) psi^2 + (128t-1) psi + 12 with
// psi = phi'/phi, phi(t) = 2F1(1/4,3/4;1;64t), derivatives by term-wise
// differentiated series.
Complex riccati_residual(Complex t);

// Residual of t(64t-1) phi'' + (128t-1) phi' + 12 phi.
Complex hypergeo_ode_residual(Complex t);

// |sum_{n<=N} P_n(z) r^n - G_2(x1,x2)| with z = (x1+x2)/(x1-x2), r = x1-x2,
// P_n the Legendre polynomials by the three-term recurrence.
double legendre_generating_check(double x1, double x2, int N);

// Base evaluators (value + domain predicate) for the contour recursion.
BaseEvaluator base_g1();
BaseEvaluator base_g2();
BaseEvaluator base_g3();

}  // namespace gnfam

#endif
