#include "gnfam/closed_forms.hpp"

#include <cmath>
#include <vector>

#include "gnfam/hyp2f1.hpp"
#include "gnfam/series.hpp"
#include "gnfam/symmetry.hpp"

namespace gnfam {

namespace {

// Exact-cut test: the principal square root is refused on (-inf, 0].
bool on_negative_real_axis(Complex q) {
    return q.imag() == 0.0 && q.real() <= 0.0;
}

void check_q_branch(Complex q, const char* who) {
    if (std::abs(q) < 1e-14) throw SingularQError(std::string(who) + ": Q(x) = 0");
    if (on_negative_real_axis(q))
        throw BranchCutError(std::string(who) + ": Q(x) on the cut (-inf, 0]");
}

}  // namespace

Complex g1(Complex x) {
    if (std::abs(1.0 - x) < 1e-15 * (1.0 + std::abs(x)))
        throw PoleError("g1: pole at x = 1");
    return 1.0 / (1.0 - x);
}

Complex g2(Complex x1, Complex x2) {
    Complex q = qn(CPoint{x1, x2});
    check_q_branch(q, "g2");
    return 1.0 / std::sqrt(q);
}

Complex g3(const CPoint& x) {
    if (x.dim() != 3) throw std::invalid_argument("g3: dim(x) must be 3");
    Complex q = qn(x);
    check_q_branch(q, "g3");
    Complex u = u_invariant(x);
    if (u.imag() == 0.0 && u.real() >= 1.0)
        throw BranchCutError("g3: u(x) on the cut [1, inf)");
    return hyp2f1(0.25, 0.75, 1.0, u) / std::sqrt(q);
}

Complex elliptic_quartic(const CPoint& x, Complex t) {
    Complex base = (1.0 - t) * (1.0 - x.x(3) * t) + (x.x(1) + x.x(2)) * t;
    return base * base - 4.0 * x.x(1) * x.x(2) * t * t;
}

EllipticReduction elliptic_reduction(const CPoint& x) {
    if (x.dim() != 3) throw std::invalid_argument("elliptic_reduction: dim(x) must be 3");
    Complex x3 = x.x(3);
    if (x3 == 0.0) throw ZeroX3Error("elliptic_reduction: x_3 = 0 (permute the point first)");
    Complex q = qn(x);
    if (std::abs(q) < 1e-14) throw SingularQError("elliptic_reduction: Q_3(x) = 0");

    EllipticReduction red;
    red.Q = q;
    red.u = u_invariant(x);
    Complex s = std::sqrt(x.x(1) * x.x(2));
    Complex base = 1.0 - x.x(1) - x.x(2) + x3;
    red.a_plus = base + 2.0 * s;
    red.a_minus = base - 2.0 * s;
    Complex rp = std::sqrt(red.a_plus * red.a_plus - 4.0 * x3);
    Complex rm = std::sqrt(red.a_minus * red.a_minus - 4.0 * x3);
    red.t1 = (red.a_plus - rp) / (2.0 * x3);
    red.t3 = (red.a_plus + rp) / (2.0 * x3);
    red.t2 = (red.a_minus - rm) / (2.0 * x3);
    red.t4 = (red.a_minus + rm) / (2.0 * x3);
    Complex w = std::sqrt(1.0 - red.u);
    red.lambda = (1.0 - w) / (1.0 + w);
    red.mu = -q / 2.0 * (1.0 + w);
    return red;
}

Evaluation g3_via_elliptic_integral(const CPoint& x, double tol) {
    EllipticReduction red = elliptic_reduction(x);
    if (red.lambda.imag() == 0.0 && red.lambda.real() >= 1.0)
        throw BranchCutError("g3_via_elliptic_integral: lambda on the cut [1, inf)");
    // t' = s^2 turns the normal form into the complete elliptic integral,
    // (2/pi) int_0^1 ds/sqrt((1-s^2)(1-lambda s^2)) = 2F1(1/2,1/2;1;lambda);
    // near x = 0 the prefactor resolves as
    // i/sqrt(mu) = sqrt(2)/sqrt(Q) (1 + sqrt(1-u))^{-1/2}.
    Complex w = (1.0 - red.lambda) / (1.0 + red.lambda);
    Complex prefactor = std::sqrt(2.0) / std::sqrt(red.Q) / std::sqrt(1.0 + w);
    Evaluation f = hyp2f1(Hyp2F1Params{0.5, 0.5, 1.0, red.lambda}, tol);
    f.value *= prefactor;
    f.error_estimate *= std::abs(prefactor);
    return f;
}

Evaluation g3_f4_expansion(const CPoint& x, int K, const TruncationSpec& trunc) {
    if (x.dim() != 3) throw std::invalid_argument("g3_f4_expansion: dim(x) must be 3");
    if (K < 0) throw std::invalid_argument("g3_f4_expansion: K >= 0");
    CPoint head{x.x(1), x.x(2)};
    if (!in_omega_n(head))
        throw DomainError("g3_f4_expansion: (x1, x2) outside Omega_2");
    Complex x3 = x.x(3);
    Complex sum = 0.0;
    Complex pw = 1.0;
    double err = 0.0;
    std::int64_t terms = 0;
    Complex last = 0.0;
    for (int k = 0; k <= K; ++k) {
        double dk = static_cast<double>(k);
        Evaluation f4 = eval_f4_series(1.0 + dk, 1.0 + dk, 1.0, 1.0, x.x(1), x.x(2), trunc);
        last = f4.value * pw;
        sum += last;
        err += f4.error_estimate * std::abs(pw);
        terms += f4.terms_used;
        pw *= x3;
    }
    // Tail of the x3 expansion estimated from the last retained term.
    double rho = std::min(std::abs(x3) * 4.0, 0.9);
    err += std::abs(last) * rho / (1.0 - rho);
    return Evaluation{sum, err, terms, K};
}

ACoefficients a_coefficients(int var_index, const CPoint& x) {
    if (x.dim() != 3) throw std::invalid_argument("a_coefficients: dim(x) must be 3");
    if (var_index < 1 || var_index > 3)
        throw std::invalid_argument("a_coefficients: var_index in {1,2,3}");
    Complex t = x.x(var_index);
    if (t == 0.0) throw ZeroCoordinateError("a_coefficients: pivot coordinate is 0");
    Complex q = qn(x);
    if (std::abs(q) < 1e-14) throw SingularQError("a_coefficients: Q_3(x) = 0");

    Complex sum = x.x(1) + x.x(2) + x.x(3);
    Complex dq = -2.0 * (1.0 - sum) - 4.0 * (sum - t);  // d_t Q_3
    Complex D = dq / q;
    Complex u = u_invariant(x);

    ACoefficients a;
    a.a2 = (1.0 / t - 4.0 * D + 4.0 * t * D * D) * u * u;
    a.a1 = (1.0 / t - 4.0 * t / q - 7.0 * D + 8.0 * t * D * D) * u;
    a.a0 = -t / q - 0.5 * D + 0.75 * t * D * D;
    return a;
}

namespace {

Rational rational_dq(const RationalPoint& x, int j) {
    Rational sum = x[0] + x[1] + x[2];
    return -2 * (1 - sum) - 4 * (sum - x[static_cast<size_t>(j)]);
}

}  // namespace

bool lemma_dq_first(const RationalPoint& x) {
    Rational q = qn(x);
    if (q == 0) throw SingularQError("lemma_dq_first: Q = 0");
    Rational dx = rational_dq(x, 0) / q;
    Rational dy = rational_dq(x, 1) / q;
    return dx - dy == 4 * (x[0] - x[1]) / q;
}

bool lemma_dq_second(const RationalPoint& x) {
    if (x[0] == 0 || x[1] == 0) throw ZeroCoordinateError("lemma_dq_second: x or y = 0");
    Rational q = qn(x);
    if (q == 0) throw SingularQError("lemma_dq_second: Q = 0");
    Rational dx = rational_dq(x, 0) / q;
    Rational dy = rational_dq(x, 1) / q;
    Rational u = u_invariant(x);
    Rational lhs = x[0] * dx * dx - x[1] * dy * dy;
    Rational rhs = 4 * (x[0] - x[1]) / q + (x[0] - x[1]) * u / (4 * x[0] * x[1]);
    return lhs == rhs;
}

bool elliptic_product_identity(const RationalPoint& x) {
    if (x.size() != 3) throw std::invalid_argument("elliptic_product_identity: n must be 3");
    Rational c = 1 - x[0] - x[1] + x[2];
    Rational p = x[0] * x[1];
    Rational q = qn(x);
    Rational lhs = (c * c + 4 * p - 4 * x[2]) * (c * c + 4 * p - 4 * x[2]) - 16 * c * c * p;
    Rational rhs = q * q - 64 * p * x[2];
    return lhs == rhs;
}

namespace {

void check_riccati_domain(Complex t) {
    Complex s = 64.0 * t;
    if (s.imag() == 0.0 && s.real() >= 1.0)
        throw DomainError("64 t on the cut [1, inf)");
}

Complex phi_val(Complex t) { return hyp2f1(0.25, 0.75, 1.0, 64.0 * t); }
Complex phi_d1(Complex t) { return 12.0 * hyp2f1(1.25, 1.75, 2.0, 64.0 * t); }
Complex phi_d2(Complex t) { return 840.0 * hyp2f1(2.25, 2.75, 3.0, 64.0 * t); }

}  // namespace

Complex riccati_residual(Complex t) {
    check_riccati_domain(t);
    Complex phi = phi_val(t), dphi = phi_d1(t), ddphi = phi_d2(t);
    Complex psi = dphi / phi;
    Complex dpsi = ddphi / phi - psi * psi;
    Complex lead = t * (64.0 * t - 1.0);
    return lead * dpsi + lead * psi * psi + (128.0 * t - 1.0) * psi + 12.0;
}

Complex hypergeo_ode_residual(Complex t) {
    check_riccati_domain(t);
    return t * (64.0 * t - 1.0) * phi_d2(t) + (128.0 * t - 1.0) * phi_d1(t) +
           12.0 * phi_val(t);
}

double legendre_generating_check(double x1, double x2, int N) {
    if (x1 == x2) throw DomainError("legendre_generating_check: x1 = x2");
    double r = x1 - x2;
    double z = (x1 + x2) / r;
    double zz = std::abs(z);
    double growth = zz + std::sqrt(std::max(zz * zz - 1.0, 0.0));
    if (std::abs(r) * growth >= 1.0)
        throw DomainError("legendre_generating_check: |r|(|z|+sqrt(z^2-1)) >= 1");

    double p_prev = 1.0, p = z;
    double rn = r;
    double sum = 1.0 + p * rn;
    for (int n = 1; n < N; ++n) {
        double p_next = ((2.0 * n + 1.0) * z * p - n * p_prev) / (n + 1.0);
        p_prev = p;
        p = p_next;
        rn *= r;
        sum += p * rn;
    }
    return std::abs(sum - g2(x1, x2).real());
}

BaseEvaluator base_g1() {
    return BaseEvaluator{
        [](const CPoint& w) { return g1(w.x(1)); },
        [](const CPoint& w) { return std::abs(1.0 - w.x(1)) > 1e-6; }};
}

BaseEvaluator base_g2() {
    return BaseEvaluator{
        [](const CPoint& w) { return g2(w.x(1), w.x(2)); },
        [](const CPoint& w) {
            Complex q = qn(w);
            if (std::abs(q) < 1e-10) return false;
            return !(q.real() <= 0.0 && std::abs(q.imag()) <= 1e-12);
        }};
}

BaseEvaluator base_g3() {
    return BaseEvaluator{
        [](const CPoint& w) { return g3(w); },
        [](const CPoint& w) {
            Complex q = qn(w);
            if (std::abs(q) < 1e-10) return false;
            if (q.real() <= 0.0 && std::abs(q.imag()) <= 1e-12) return false;
            Complex u = 64.0 * w.x(1) * w.x(2) * w.x(3) / (q * q);
            if (u.real() >= 1.0 && std::abs(u.imag()) <= 1e-12) return false;
            return std::abs(u) <= 0.75 || std::abs(u / (u - 1.0)) <= 0.75;
        }};
}

}  // namespace gnfam
