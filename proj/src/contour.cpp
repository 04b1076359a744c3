#include "gnfam/contour.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace gnfam {

namespace {

constexpr double kPi = std::numbers::pi;

int round_up_pow2(int n, int floor_value) {
    int p = floor_value;
    while (p < n) p *= 2;
    return p;
}

std::string complex_str(Complex v) {
    std::ostringstream os;
    os << "(" << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
    return os.str();
}

std::function<Complex(Complex)> recursion_integrand(const CPoint& x,
                                                    const BaseEvaluator& base) {
    const int n = x.dim();
    const Complex a = x.x(n);
    std::vector<Complex> head(x.coords().begin(), x.coords().end() - 1);
    BaseEvaluator b = base;
    return [n, a, head = std::move(head), b = std::move(b)](Complex t) -> Complex {
        Complex s = s_map(a, t);
        if (n == 1) return s / t;  // G_0 = 1
        std::vector<Complex> mapped(head.size());
        for (size_t j = 0; j < head.size(); ++j) mapped[j] = s * head[j];
        CPoint m(mapped);
        if (!b.in_domain(m))
            throw DomainError("gn_via_recursion: integrand left the base domain at t = " +
                              complex_str(t));
        return b.eval(m) * s / t;
    };
}

}  // namespace

Complex s_map(Complex a, Complex t) {
    Complex d1 = t - 1.0;
    Complex d2 = 1.0 - a * t;
    double scale = 1.0 + std::abs(t);
    if (std::abs(d1) < 1e-15 * scale)
        throw PoleError("s_map: t at the pole t = 1");
    if (std::abs(d2) < 1e-15 * scale * (1.0 + std::abs(a)))
        throw PoleError("s_map: t at the pole t = 1/a");
    return t / (d1 * d2);
}

Complex s_map_multi(std::span<const Complex> a, std::span<const Complex> t) {
    if (a.empty() || a.size() != t.size())
        throw std::invalid_argument("s_map_multi: vectors must be nonempty and of equal length");
    const int m = static_cast<int>(a.size());
    Complex c = 1.0;
    for (int k = m - 1; k >= 1; --k) {
        try {
            c *= s_map(c * a[static_cast<size_t>(k)], t[static_cast<size_t>(k)]);
        } catch (const PoleError& e) {
            throw PoleError(std::string(e.what()) + " (recursion depth " +
                            std::to_string(m - k) + ")");
        }
    }
    return s_map(c * a[0], t[0]);
}

Complex contour_trapezoid(const std::function<Complex(Complex)>& f,
                          const ContourSpec& c, int nodes) {
    Complex sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        Complex e = std::polar(1.0, 2.0 * kPi * k / nodes);
        sum += f(c.center + c.radius * e) * e;
    }
    return sum * (c.radius / nodes);
}

QuadratureResult contour_integral(const std::function<Complex(Complex)>& f,
                                  const ContourSpec& c, double tol, int max_nodes) {
    const double r = c.radius;
    int n = round_up_pow2(std::max(c.nodes, 16), 16);

    auto partial = [&](int total, int stride, int offset) {
        Complex s = 0.0;
        for (int k = offset; k < total; k += stride) {
            Complex e = std::polar(1.0, 2.0 * kPi * k / total);
            s += f(c.center + r * e) * e;
        }
        return s;
    };

    Complex sum = partial(n, 1, 0);  // unscaled node sum
    Complex value = sum * (r / n);
    while (n < max_nodes) {
        sum += partial(2 * n, 2, 1);  // odd nodes of the doubled rule
        n *= 2;
        Complex next = sum * (r / n);
        double diff = std::abs(next - value);
        value = next;
        if (diff < tol * std::max(1.0, std::abs(value)))
            return QuadratureResult{value, n, diff};
    }
    throw NonConvergenceError("contour_integral: node cap reached before tol");
}

Evaluation gn_via_recursion(const CPoint& x, const BaseEvaluator& base,
                            const ContourSpec& c, double tol, int max_nodes) {
    QuadratureResult q = contour_integral(recursion_integrand(x, base), c, tol, max_nodes);
    return Evaluation{q.value, q.successive_diff, q.node_count_used, 0};
}

Complex gn_recursion_pass(const CPoint& x, const BaseEvaluator& base,
                          const ContourSpec& c, int nodes) {
    return contour_trapezoid(recursion_integrand(x, base), c, nodes);
}

Complex gn_multicontour_pass(const CPoint& x, const ContourSpec& c, int nodes) {
    const int n = x.dim();
    const double r = c.radius;
    const int N = nodes;
    std::vector<Complex> t(static_cast<size_t>(N)), w(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        Complex e = std::polar(1.0, 2.0 * kPi * k / N);
        t[static_cast<size_t>(k)] = c.center + r * e;
        w[static_cast<size_t>(k)] = e * (r / N);
    }
    // Axes are peeled right to left; the scalar chain rescales the remaining
    // parameters, so the tensor integral nests as one loop per axis.
    std::function<Complex(int, Complex)> axis = [&](int j, Complex scale) -> Complex {
        Complex tot = 0.0;
        const Complex aj = scale * x.x(j + 1);
        for (int k = 0; k < N; ++k) {
            Complex s = s_map(aj, t[static_cast<size_t>(k)]);
            Complex inner = j == 0 ? Complex(1.0) : axis(j - 1, scale * s);
            tot += w[static_cast<size_t>(k)] * s / t[static_cast<size_t>(k)] * inner;
        }
        return tot;
    };
    return axis(n - 1, Complex(1.0));
}

Evaluation gn_via_multicontour(const CPoint& x, const ContourSpec& c, double tol) {
    const int n = x.dim();
    if (n > 3)
        throw UnsupportedDimensionError("gn_via_multicontour supports n <= 3 (cost is nodes^n)");

    const int cap = n == 3 ? 256 : 4096;
    int N = n == 3 ? 16 : round_up_pow2(std::max(std::min(c.nodes, cap / 4), 16), 16);
    Complex value = gn_multicontour_pass(x, c, N);
    while (N < cap) {
        N *= 2;
        Complex next = gn_multicontour_pass(x, c, N);
        double diff = std::abs(next - value);
        value = next;
        if (diff < tol * std::max(1.0, std::abs(value))) {
            std::int64_t total = 1;
            for (int j = 0; j < n; ++j) total *= N;
            return Evaluation{value, diff, total, N};
        }
    }
    throw NonConvergenceError("gn_via_multicontour: node cap reached before tol");
}

// ---------------------------------------------------------------------------
// Kernel loop quadrature.
//
// For non-integer z the power S^{z+1} is not single-valued on a closed circle
// around t = 1 (the mapped contour winds once about 0), so the loop is taken
// as written: out along (0, center-r], once around the circle, and back on
// the shifted sheet.  The circle part integrates the continuous branch
// exactly against its Fourier interpolant over one turn starting at the
// segment junction; the two segment passes combine into the prefactor
// 1 - e^{-2 pi i (z+1)}.  For integer z both reduce to the plain closed-loop
// trapezoid.

namespace {

// Integral over (0, L] by tanh-sinh quadrature; tolerates the t^z endpoint.
Complex tanh_sinh_segment(const std::function<Complex(double)>& f, double L, double h) {
    Complex total = 0.0;
    for (int sign = -1; sign <= 1; sign += 2) {
        for (int j = (sign < 0 ? 1 : 0); j < 4000; ++j) {
            double s = sign * j * h;
            double sh = 0.5 * kPi * std::sinh(s);
            double xx = std::tanh(sh);
            double wt = 0.5 * kPi * std::cosh(s) / std::pow(std::cosh(sh), 2);
            double tj = 0.5 * L * (1.0 + xx);
            if (tj <= 0.0 || tj >= L || wt == 0.0) {
                if (j > 8) break;
                continue;
            }
            Complex contrib = f(tj) * (wt * 0.5 * L * h);
            total += contrib;
            if (j > 8 && std::abs(contrib) < 1e-18 * (1.0 + std::abs(total))) break;
        }
    }
    return total;
}

void kernel_preconditions(Complex u, Complex z, const ContourSpec& c) {
    if (std::abs(u) >= 1.0) throw DomainError("kernel_via_contour requires |u| < 1");
    if (z.real() <= -1.0) throw DomainError("kernel_via_contour requires Re(z) > -1");
    if (c.center.imag() != 0.0 || c.center.real() - c.radius <= 1e-6)
        throw DomainError("kernel_via_contour: contour must sit on the real axis with 0 outside");
    if (std::abs(c.center - 1.0) >= c.radius)
        throw DomainError("kernel_via_contour: contour must encircle t = 1");
    if (u != 0.0 && std::abs(1.0 / u - c.center) <= c.radius + 1e-9)
        throw DomainError("kernel_via_contour: contour must exclude t = 1/u");
}

}  // namespace

Complex kernel_loop_pass(Complex u, Complex z, const ContourSpec& c,
                         int circle_nodes, double segment_step) {
    kernel_preconditions(u, z, c);
    const double r = c.radius;
    const double x0 = c.center.real() - r;
    const Complex zz = z + 1.0;
    const int N = circle_nodes;

    std::vector<double> th(static_cast<size_t>(N));
    std::vector<Complex> t(static_cast<size_t>(N)), w(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        th[static_cast<size_t>(k)] = 2.0 * kPi * k / N;
        t[static_cast<size_t>(k)] = c.center + r * std::polar(1.0, th[static_cast<size_t>(k)]);
        w[static_cast<size_t>(k)] = -s_map(u, t[static_cast<size_t>(k)]);
    }

    // Continuous log of e^{i pi} S, principal at theta = pi (the junction).
    const int k0 = N / 2;
    std::vector<Complex> L(static_cast<size_t>(N));
    L[static_cast<size_t>(k0)] = std::log(w[static_cast<size_t>(k0)]);
    auto step = [&](int from, int to) {
        Complex d = std::log(w[static_cast<size_t>(to)] / w[static_cast<size_t>(from)]);
        if (std::abs(d.imag()) > 0.5 * kPi)
            throw BranchError("kernel_via_contour: argument jump between adjacent nodes exceeds pi/2");
        return d;
    };
    for (int k = k0 + 1; k < N; ++k)
        L[static_cast<size_t>(k)] = L[static_cast<size_t>(k) - 1] + step(k - 1, k);
    for (int k = k0 - 1; k >= 0; --k)
        L[static_cast<size_t>(k)] = L[static_cast<size_t>(k) + 1] - step(k, k + 1);
    double sweep = (L[static_cast<size_t>(N) - 1] + step(N - 1, 0) - L[0]).imag();
    if (std::abs(sweep + 2.0 * kPi) > 0.5)
        throw BranchError("kernel_via_contour: branch anchor failed (winding != -1)");

    // S^{z+1} = exp((z+1)(L + i pi)); g is its periodic part.
    std::vector<Complex> g(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        Complex M = L[static_cast<size_t>(k)] + Complex(0.0, th[static_cast<size_t>(k)]);
        g[static_cast<size_t>(k)] = std::exp(zz * (M + Complex(0.0, kPi))) * r *
                                    std::polar(1.0, th[static_cast<size_t>(k)]) /
                                    t[static_cast<size_t>(k)];
    }

    // circle = (1/2pi) int_pi^{3pi} g(theta) e^{-i(z+1)theta} dtheta via the
    // Fourier interpolant of g.
    Complex circle = 0.0;
    std::vector<Complex> rot(static_cast<size_t>(N)), cur(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k) {
        rot[static_cast<size_t>(k)] = std::polar(1.0, -th[static_cast<size_t>(k)]);
        cur[static_cast<size_t>(k)] = std::polar(1.0, th[static_cast<size_t>(k)] * (N / 2.0));
    }
    for (int m = -N / 2; m < N / 2; ++m) {
        Complex ghat = 0.0;
        for (int k = 0; k < N; ++k) {
            ghat += g[static_cast<size_t>(k)] * cur[static_cast<size_t>(k)];
            cur[static_cast<size_t>(k)] *= rot[static_cast<size_t>(k)];
        }
        ghat /= static_cast<double>(N);
        Complex d = static_cast<double>(m) - zz;
        Complex Em;
        if (std::abs(d) < 1e-12) {
            Em = 2.0 * kPi;
        } else {
            Complex ipd = Complex(0.0, kPi) * d;
            Em = std::exp(ipd) * (std::exp(2.0 * ipd) - 1.0) / (Complex(0.0, 1.0) * d);
        }
        circle += ghat * Em;
    }
    circle /= 2.0 * kPi;

    // Out-and-back segment passes along (0, x0].
    const Complex seam = 1.0 - std::exp(Complex(0.0, -2.0 * kPi) * zz);
    if (std::abs(seam) < 1e-15) return circle;
    auto f = [&](double tt) -> Complex {
        Complex ww = -s_map(u, Complex(tt, 0.0));
        if (std::abs(std::arg(ww)) > 0.9 * kPi)
            throw BranchError("kernel_via_contour: segment crosses the mapped cut");
        return std::exp(zz * (std::log(ww) + Complex(0.0, kPi))) / tt;
    };
    Complex seg = tanh_sinh_segment(f, x0, segment_step);
    return circle + seam * seg / Complex(0.0, 2.0 * kPi);
}

Evaluation kernel_via_contour(Complex u, Complex z, const ContourSpec& c, double tol) {
    kernel_preconditions(u, z, c);
    int N = round_up_pow2(std::max(c.nodes, 64), 64);
    const int cap = 1 << 13;
    auto seg_step = [](int nodes) { return 12.8 / nodes; };

    auto attempt = [&](int nodes, Complex& out) -> bool {
        try {
            out = kernel_loop_pass(u, z, c, nodes, seg_step(nodes));
            return true;
        } catch (const BranchError&) {
            if (nodes >= cap) throw;
            return false;  // undersampled branch tracking; refine
        }
    };

    Complex value;
    while (!attempt(N, value)) N *= 2;
    while (N < cap) {
        Complex next;
        int n2 = N * 2;
        if (!attempt(n2, next)) {
            N = n2;
            continue;
        }
        double diff = std::abs(next - value);
        value = next;
        N = n2;
        if (diff < tol * std::max(1.0, std::abs(value)))
            return Evaluation{value, diff, N, 0};
    }
    throw NonConvergenceError("kernel_via_contour: node cap reached before tol");
}

}  // namespace gnfam
