#ifndef GNFAM_CONTOUR_HPP
#define GNFAM_CONTOUR_HPP

#include <functional>
#include <span>

#include "gnfam/types.hpp"

namespace gnfam {

// Positively oriented circle |t - center| = radius.  nodes is the starting
// trapezoidal node count (a power of two, >= 16); adaptive refinement doubles it.
struct ContourSpec {
    Complex center{1.0, 0.0};
    double radius = 0.5;
    int nodes = 256;
};

struct QuadratureResult {
    Complex value{};
    int node_count_used = 0;
    double successive_diff = 0.0;  // |value(N) - value(N/2)| at the accepted N
};

// S(a;t) = t/((t-1)(1-a t)).
Complex s_map(Complex a, Complex t);

// The chained map S(a_1..a_m; t_1..t_m): the scalar S(a_m,t_m) rescales the
// leading parameter vector, recursively.
Complex s_map_multi(std::span<const Complex> a, std::span<const Complex> t);

// (1/2 pi i) * closed contour integral of f over c, trapezoidal rule with
// node doubling until |value(N) - value(N/2)| < tol * max(1, |value|).
QuadratureResult contour_integral(const std::function<Complex(Complex)>& f,
                                  const ContourSpec& c, double tol,
                                  int max_nodes = 1 << 14);

// A G_{n-1} evaluator together with its domain predicate; every quadrature
// node's mapped argument is tested against in_domain before eval is called.
struct BaseEvaluator {
    std::function<Complex(const CPoint&)> eval;
    std::function<bool(const CPoint&)> in_domain;
};

// G_n(x) = (1/2 pi i) \oint G_{n-1}(S(x_n;t) x') S(x_n;t) dt/t.
Evaluation gn_via_recursion(const CPoint& x, const BaseEvaluator& base,
                            const ContourSpec& c, double tol,
                            int max_nodes = 1 << 14);

// G_n(x) = (1/2 pi i)^n \oint...\oint prod_j S(xbar_j; tbar_j) dt_j/t_j over
// the tensor-product contour, n <= 3 (cost scales as nodes^n).
Evaluation gn_via_multicontour(const CPoint& x, const ContourSpec& c, double tol);

// K(u,z) = (1/2 pi i) \oint S(u;t)^{z+1} dt/t along the loop that leaves the
// origin, encircles t = 1 once and returns; the power uses the branch
// anchored by arg(e^{i pi} S) in (-pi, pi] near t = 1.
Evaluation kernel_via_contour(Complex u, Complex z, const ContourSpec& c, double tol);

// Fixed-node single passes, for convergence studies.
Complex contour_trapezoid(const std::function<Complex(Complex)>& f,
                          const ContourSpec& c, int nodes);
Complex gn_recursion_pass(const CPoint& x, const BaseEvaluator& base,
                          const ContourSpec& c, int nodes);
Complex gn_multicontour_pass(const CPoint& x, const ContourSpec& c, int nodes);
Complex kernel_loop_pass(Complex u, Complex z, const ContourSpec& c,
                         int circle_nodes, double segment_step);

}  // namespace gnfam

#endif
