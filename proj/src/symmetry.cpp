#include "gnfam/symmetry.hpp"

#include <cmath>
#include <numbers>

#include "gnfam/closed_forms.hpp"
#include "gnfam/hyp2f1.hpp"

namespace gnfam {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex qn(const CPoint& x) { return qn_value<Complex>(x.coords()); }
Rational qn(const RationalPoint& x) { return qn_value<Rational>(x); }

CPoint t_involution(int j, const CPoint& x) {
    return CPoint(t_involution_point<Complex>(j, x.coords()));
}

RationalPoint t_involution(int j, const RationalPoint& x) {
    return t_involution_point<Rational>(j, x);
}

Complex u_invariant(const CPoint& x) { return u_invariant_value<Complex>(x.coords()); }
Rational u_invariant(const RationalPoint& x) { return u_invariant_value<Rational>(x); }

bool verify_q_covariance(int j, const RationalPoint& x) {
    RationalPoint tx = t_involution(j, x);
    Rational pivot = x[static_cast<size_t>(j) - 1];
    return qn(tx) * pivot * pivot == qn(x);
}

bool verify_u_invariance(int j, const RationalPoint& x) {
    RationalPoint tx = t_involution(j, x);
    return u_invariant(tx) == u_invariant(x);
}

// ---------------------------------------------------------------------------
// Branch tracking along s -> s*x, s in [0, 1].

namespace {

CPoint scaled(const CPoint& x, double s) {
    std::vector<Complex> c(x.coords());
    for (Complex& v : c) v *= s;
    return CPoint(c);
}

void check_u_off_cut(const CPoint& p) {
    Complex uu = u_invariant(p);
    if (std::abs(uu.imag()) < 1e-12 && uu.real() >= 1.0)
        throw BranchPathError("tracking path meets the locus u in [1, inf)");
}

}  // namespace

Complex sqrt_qn_tracked(const CPoint& x) {
    const bool watch_u = x.dim() == 3;
    Complex q_prev = 1.0;  // Q_n(0)
    Complex w = 1.0;       // anchored root
    double s = 0.0;
    double ds = 1.0 / 64.0;
    int steps = 0;
    while (s < 1.0) {
        double s_next = std::min(1.0, s + ds);
        CPoint p = scaled(x, s_next);
        Complex q = qn(p);
        if (std::abs(q) < 1e-12)
            throw BranchPathError("tracking path meets the locus Q_n = 0");
        double dphi = std::abs(std::arg(q / q_prev));
        if (dphi > kPi / 4.0) {
            ds *= 0.5;
            if (ds < 1e-9)
                throw BranchPathError("argument of Q_n moves too fast along the path");
            continue;
        }
        if (watch_u) check_u_off_cut(p);
        Complex r = std::sqrt(q);
        w = (std::abs(r - w) <= std::abs(r + w)) ? r : -r;
        q_prev = q;
        s = s_next;
        if (++steps > 1 << 20)
            throw BranchPathError("tracking step count exceeded");
    }
    return w;
}

Complex gn_tracked(const CPoint& x) {
    const int n = x.dim();
    Complex w = sqrt_qn_tracked(x);
    if (n == 2) return 1.0 / w;
    if (n == 3) return hyp2f1(0.25, 0.75, 1.0, u_invariant(x)) / w;
    throw UnsupportedDimensionError("gn_tracked: closed forms exist for n in {2, 3}");
}

double verify_quasi_invariance(int n, int j, const CPoint& x, double /*tol*/) {
    if (n != 2 && n != 3)
        throw UnsupportedDimensionError("verify_quasi_invariance: n must be 2 or 3");
    if (x.dim() != n) throw std::invalid_argument("verify_quasi_invariance: dim(x) != n");
    CPoint tx = t_involution(j, x);
    Complex lhs = gn_tracked(tx);
    Complex rhs = x.x(j) * gn_tracked(x);
    return std::abs(lhs + rhs);
}

double hn_invariance_residual(int j, const CPoint& x) {
    const int n = x.dim();
    if (n != 2 && n != 3)
        throw UnsupportedDimensionError("hn_invariance_residual: n must be 2 or 3");
    CPoint tx = t_involution(j, x);
    Complex h1 = sqrt_qn_tracked(x) * gn_tracked(x);
    Complex h2 = sqrt_qn_tracked(tx) * gn_tracked(tx);
    return std::abs(h2 - h1);
}

Complex hn(const CPoint& x) {
    const int n = x.dim();
    Complex q = qn(x);
    if (std::abs(q) < 1e-14) throw SingularQError("hn: Q_n(x) = 0");
    switch (n) {
        case 1: return std::sqrt(q) * g1(x.x(1));
        case 2: return std::sqrt(q) * g2(x.x(1), x.x(2));
        case 3: return std::sqrt(q) * g3(x);
        default:
            throw UnsupportedDimensionError("hn: closed forms exist for n <= 3");
    }
}

}  // namespace gnfam
