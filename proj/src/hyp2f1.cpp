#include "gnfam/hyp2f1.hpp"

#include <cmath>

namespace gnfam {

namespace {

constexpr int kMaxTerms = 20000;
constexpr double kSeriesRadius = 0.9;

bool is_nonpositive_integer(Complex g) {
    if (std::abs(g.imag()) > 1e-14) return false;
    double r = g.real();
    return r < 0.5 && std::abs(r - std::round(r)) < 1e-14;
}

Evaluation hyp2f1_series(Complex a, Complex b, Complex c, Complex z, double tol) {
    Complex term = 1.0, sum = 1.0;
    double ratio_bound = std::abs(z);
    int k = 0;
    for (; k < kMaxTerms; ++k) {
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
        sum += term;
        double scale = std::max(1.0, std::abs(sum));
        if (std::abs(term) < 0.1 * tol * scale &&
            std::abs(term) * ratio_bound / (1.0 - ratio_bound) < tol * scale)
            break;
    }
    if (k == kMaxTerms)
        throw ConvergenceError("hyp2f1 series did not reach tol");
    double err = std::abs(term) / (1.0 - ratio_bound);
    return Evaluation{sum, err, k + 1, k + 1};
}

}  // namespace

Evaluation hyp2f1(const Hyp2F1Params& p, double tol) {
    if (is_nonpositive_integer(p.c))
        throw ParameterError("hyp2f1: c is a nonpositive integer");
    if (std::abs(p.z) <= kSeriesRadius)
        return hyp2f1_series(p.a, p.b, p.c, p.z, tol);
    Complex w = p.z / (p.z - 1.0);
    if (std::abs(w) <= kSeriesRadius) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a,c-b;c;z/(z-1)).
        Evaluation e = hyp2f1_series(p.a, p.c - p.b, p.c, w, tol);
        Complex pref = std::pow(1.0 - p.z, -p.a);
        e.value *= pref;
        e.error_estimate *= std::abs(pref);
        return e;
    }
    throw DomainError("hyp2f1: z outside the supported region (series disc and Pfaff image)");
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z, double tol) {
    return hyp2f1(Hyp2F1Params{a, b, c, z}, tol).value;
}

double pfaff_quadratic_check(Complex a, Complex b, Complex z) {
    Complex c = a - b + 1.0;
    Complex lhs = hyp2f1(a, b, c, z);
    Complex zq = 4.0 * z / ((1.0 + z) * (1.0 + z));
    Complex rhs = std::pow(1.0 + z, -a) * hyp2f1(a / 2.0, (1.0 + a) / 2.0, c, zq);
    return std::abs(lhs - rhs);
}

PkCoefficients pk_coefficients(int k) {
    if (k < 1) throw std::invalid_argument("pk_coefficients: k >= 1");
    std::vector<BigInt> p{1};  // polynomial 1, ascending
    for (int j = 1; j <= k; ++j) {
        // multiply by (z + j)^2 = z^2 + 2j z + j^2
        std::vector<BigInt> q(p.size() + 2, 0);
        BigInt jj = j;
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i] * jj * jj;
            q[i + 1] += p[i] * 2 * jj;
            q[i + 2] += p[i];
        }
        p = std::move(q);
    }
    return PkCoefficients{k, std::move(p)};
}

Evaluation kernel_K(Complex u, Complex z, double tol) {
    if (std::abs(u) >= 1.0)
        throw DomainError("kernel_K requires |u| < 1");
    return hyp2f1(Hyp2F1Params{z + 1.0, z + 1.0, 1.0, u}, tol);
}

Complex kernel_series_partial(Complex u, Complex z, int K) {
    Complex sum = 0.0;
    Complex term = 1.0;  // P_k(z) u^k / k!^2, marched by ratio to stay in range
    for (int k = 0; k <= K; ++k) {
        sum += term;
        Complex f = (z + static_cast<double>(k + 1)) / static_cast<double>(k + 1);
        term *= f * f * u;
    }
    return sum;
}

}  // namespace gnfam
