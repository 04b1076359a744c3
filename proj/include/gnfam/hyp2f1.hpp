#ifndef GNFAM_HYP2F1_HPP
#define GNFAM_HYP2F1_HPP

#include <vector>

#include "gnfam/rational.hpp"
#include "gnfam/types.hpp"

namespace gnfam {

struct Hyp2F1Params {
    Complex a, b, c, z;
};

// Gauss 2F1(a,b;c;z).  Direct series for |z| <= 0.9, Pfaff map
// z -> z/(z-1) when that lands in the series disc; no continuation onto
// the cut [1, inf).  tol is absolute for |value| <= 1, relative otherwise.
Evaluation hyp2f1(const Hyp2F1Params& p, double tol = 1e-14);
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z, double tol = 1e-14);

// |2F1(a,b;a-b+1;z) - (1+z)^(-a) 2F1(a/2,(1+a)/2;a-b+1;4z/(1+z)^2)|.
double pfaff_quadratic_check(Complex a, Complex b, Complex z);

// Exact coefficients of P_k(z) = prod_{j=1..k} (z+j)^2, ascending order.
struct PkCoefficients {
    int k = 0;
    std::vector<BigInt> coeffs;  // C_{k,0} .. C_{k,2k}
};

PkCoefficients pk_coefficients(int k);

// Kernel K(u,z) = sum_k P_k(z)/k!^2 u^k = 2F1(z+1,z+1;1;u).
Evaluation kernel_K(Complex u, Complex z, double tol = 1e-14);

// Partial sum of the P_k form, sum_{k<=K} P_k(z)/k!^2 u^k.
Complex kernel_series_partial(Complex u, Complex z, int K);

}  // namespace gnfam

#endif
