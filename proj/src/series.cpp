#include "gnfam/series.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace gnfam {

namespace {

bool is_nonpositive_integer(Complex g) {
    if (std::abs(g.imag()) > 1e-14) return false;
    double r = g.real();
    return r < 0.5 && std::abs(r - std::round(r)) < 1e-14;
}

void check_gammas(const std::vector<Complex>& gamma) {
    for (size_t j = 0; j < gamma.size(); ++j) {
        if (is_nonpositive_integer(gamma[j])) {
            std::ostringstream os;
            os << "gamma_" << j + 1 << " is a nonpositive integer";
            throw ParameterError(os.str());
        }
    }
}

// One total-degree shell of an F_C-type series, written as
//   s_d * sum_{|l|=d} multinomial(d;l)^2 * prod_j u_j[l_j],
// where u_j[k] = x_j^k k!/(gamma_j)_k.  The multinomial is carried down the
// composition recursion as a product of binomial factors, which keeps every
// intermediate within double range for degrees far beyond what (d!)^2 allows.
// Enumeration is lexicographic in (l_1, l_2, ...).
Complex fc_shell(int d, const std::vector<std::vector<Complex>>& u,
                 std::int64_t& terms) {
    const int n = static_cast<int>(u.size());
    Complex shell = 0.0;
    std::function<void(int, int, Complex)> rec = [&](int j, int rem, Complex w) {
        if (j == n - 1) {
            shell += w * u[static_cast<size_t>(j)][static_cast<size_t>(rem)];
            ++terms;
            return;
        }
        double c = 1.0;  // C(rem, k)
        for (int k = 0; k <= rem; ++k) {
            rec(j + 1, rem - k, w * (c * c) * u[static_cast<size_t>(j)][static_cast<size_t>(k)]);
            c = c * static_cast<double>(rem - k) / static_cast<double>(k + 1);
        }
    };
    rec(0, d, Complex(1.0));
    return shell;
}

struct ShellSummer {
    Complex total = 0.0;
    Complex prev_shell = 0.0;
    double tail_estimate = 0.0;
    int degree = 0;

    // Returns true once the tail estimate drops below tol.
    bool add(int d, Complex shell, double tol) {
        total += shell;
        degree = d;
        if (d >= 1) {
            double prev = std::abs(prev_shell);
            double rho = prev > 0.0 ? std::abs(shell) / prev : 0.0;
            rho = std::min(rho, 0.99);
            // Geometric tail model with 10% headroom so the estimate bounds
            // the gap to a twice-deeper truncation.
            tail_estimate = 1.1 * std::abs(shell) * rho / (1.0 - rho);
        }
        prev_shell = shell;
        return d >= 2 && tail_estimate < tol;
    }

    Evaluation finish(std::int64_t terms) const {
        return Evaluation{total, tail_estimate, terms, degree};
    }
};

Evaluation eval_fc_impl(Complex alpha, Complex beta,
                        const std::vector<Complex>& gamma, const CPoint& x,
                        const TruncationSpec& trunc) {
    const int n = x.dim();
    // Per-coordinate tables u_j[k] = x_j^k k!/(gamma_j)_k.
    std::vector<std::vector<Complex>> u(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        auto& col = u[static_cast<size_t>(j)];
        col.resize(static_cast<size_t>(trunc.max_total_degree) + 1);
        col[0] = 1.0;
        Complex xj = x.coords()[static_cast<size_t>(j)];
        Complex gj = gamma[static_cast<size_t>(j)];
        for (int k = 1; k <= trunc.max_total_degree; ++k)
            col[static_cast<size_t>(k)] =
                col[static_cast<size_t>(k) - 1] * xj * static_cast<double>(k) /
                (gj + static_cast<double>(k - 1));
    }

    ShellSummer sum;
    std::int64_t terms = 0;
    Complex sd = 1.0;  // (alpha)_d (beta)_d / (d!)^2
    for (int d = 0; d <= trunc.max_total_degree; ++d) {
        Complex shell = sd * fc_shell(d, u, terms);
        if (terms > trunc.max_terms)
            throw ConvergenceError("max_terms exceeded before target_tol");
        if (sum.add(d, shell, trunc.target_tol)) break;
        sd *= (alpha + static_cast<double>(d)) * (beta + static_cast<double>(d)) /
              (static_cast<double>(d + 1) * static_cast<double>(d + 1));
    }
    return sum.finish(terms);
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : idx_(std::move(entries)) {
    if (idx_.empty()) throw std::invalid_argument("MultiIndex: length must be >= 1");
    for (int e : idx_)
        if (e < 0) throw std::invalid_argument("MultiIndex: entries must be >= 0");
}

int MultiIndex::total() const {
    int t = 0;
    for (int e : idx_) t += e;
    return t;
}

BigInt MultiIndex::factorial_product() const {
    BigInt p = 1;
    for (int e : idx_) p *= big_factorial(e);
    return p;
}

BigInt gn_coefficient(const MultiIndex& l) {
    BigInt m = big_factorial(l.total()) / l.factorial_product();
    return m * m;
}

bool in_omega_n(const CPoint& x) {
    double s = 0.0;
    for (const Complex& c : x.coords()) s += std::sqrt(std::abs(c));
    return s < 1.0;
}

Evaluation eval_gn_series(const CPoint& x, const TruncationSpec& trunc) {
    if (!in_omega_n(x))
        throw DomainError("in_omega_n(x) violated: sum_j sqrt|x_j| >= 1");
    std::vector<Complex> ones(static_cast<size_t>(x.dim()), Complex(1.0));
    return eval_fc_impl(1.0, 1.0, ones, x, trunc);
}

Evaluation eval_fc_series(Complex alpha, Complex beta,
                          const std::vector<Complex>& gamma, const CPoint& x,
                          const TruncationSpec& trunc) {
    if (static_cast<int>(gamma.size()) != x.dim())
        throw ParameterError("gamma vector length must equal dim(x)");
    check_gammas(gamma);
    if (!in_omega_n(x))
        throw DomainError("in_omega_n(x) violated: sum_j sqrt|x_j| >= 1");
    return eval_fc_impl(alpha, beta, gamma, x, trunc);
}

Evaluation eval_f4_series(Complex alpha, Complex beta, Complex gamma,
                          Complex gamma_prime, Complex x, Complex y,
                          const TruncationSpec& trunc) {
    return eval_fc_series(alpha, beta, {gamma, gamma_prime}, CPoint{x, y}, trunc);
}

Evaluation eval_f1_series(Complex alpha, const std::array<Complex, 2>& beta,
                          Complex gamma, Complex x, Complex y,
                          const TruncationSpec& trunc) {
    check_gammas({gamma});
    if (std::max(std::abs(x), std::abs(y)) >= 0.9)
        throw DomainError("eval_f1_series requires max(|x|,|y|) < 0.9");

    // Separable tables b_j[k] = (beta_j)_k t^k / k!; the shell factor is
    // (alpha)_d / (gamma)_d.
    const int D = trunc.max_total_degree;
    std::array<std::vector<Complex>, 2> tab;
    for (int j = 0; j < 2; ++j) {
        Complex t = j == 0 ? x : y;
        auto& col = tab[static_cast<size_t>(j)];
        col.assign(static_cast<size_t>(D) + 1, 1.0);
        for (int k = 1; k <= D; ++k)
            col[static_cast<size_t>(k)] =
                col[static_cast<size_t>(k) - 1] * t *
                (beta[static_cast<size_t>(j)] + static_cast<double>(k - 1)) /
                static_cast<double>(k);
    }

    ShellSummer sum;
    std::int64_t terms = 0;
    Complex sd = 1.0;  // (alpha)_d / (gamma)_d
    for (int d = 0; d <= D; ++d) {
        Complex shell = 0.0;
        for (int k = 0; k <= d; ++k, ++terms)
            shell += tab[0][static_cast<size_t>(k)] * tab[1][static_cast<size_t>(d - k)];
        shell *= sd;
        if (terms > trunc.max_terms)
            throw ConvergenceError("max_terms exceeded before target_tol");
        if (sum.add(d, shell, trunc.target_tol)) break;
        sd *= (alpha + static_cast<double>(d)) / (gamma + static_cast<double>(d));
    }
    return sum.finish(terms);
}

Evaluation eval_f2_series(Complex alpha, const std::array<Complex, 2>& beta,
                          const std::array<Complex, 2>& gamma, Complex x,
                          Complex y, const TruncationSpec& trunc) {
    check_gammas({gamma[0], gamma[1]});
    if (std::abs(x) + std::abs(y) >= 0.8)
        throw DomainError("eval_f2_series requires |x| + |y| < 0.8");

    // Tables b_j[k] = (beta_j)_k t^k / ((gamma_j)_k k!); shell factor (alpha)_d.
    const int D = trunc.max_total_degree;
    std::array<std::vector<Complex>, 2> tab;
    for (int j = 0; j < 2; ++j) {
        Complex t = j == 0 ? x : y;
        auto& col = tab[static_cast<size_t>(j)];
        col.assign(static_cast<size_t>(D) + 1, 1.0);
        for (int k = 1; k <= D; ++k)
            col[static_cast<size_t>(k)] =
                col[static_cast<size_t>(k) - 1] * t *
                (beta[static_cast<size_t>(j)] + static_cast<double>(k - 1)) /
                ((gamma[static_cast<size_t>(j)] + static_cast<double>(k - 1)) *
                 static_cast<double>(k));
    }

    ShellSummer sum;
    std::int64_t terms = 0;
    Complex sd = 1.0;  // (alpha)_d
    for (int d = 0; d <= D; ++d) {
        Complex shell = 0.0;
        for (int k = 0; k <= d; ++k, ++terms)
            shell += tab[0][static_cast<size_t>(k)] * tab[1][static_cast<size_t>(d - k)];
        shell *= sd;
        if (terms > trunc.max_terms)
            throw ConvergenceError("max_terms exceeded before target_tol");
        if (sum.add(d, shell, trunc.target_tol)) break;
        sd *= alpha + static_cast<double>(d);
    }
    return sum.finish(terms);
}

// ---------------------------------------------------------------------------
// Exact coefficient identities.

namespace {

// Dense table of a_l = (|l|!/l!)^2 for all l with entries <= deg, n <= 4.
struct CoeffTable {
    int n;
    int deg;
    std::vector<BigInt> a;

    size_t index(const std::vector<int>& l) const {
        size_t ix = 0;
        for (int j = 0; j < n; ++j)
            ix = ix * static_cast<size_t>(deg + 1) + static_cast<size_t>(l[static_cast<size_t>(j)]);
        return ix;
    }

    void build() {
        size_t size = 1;
        for (int j = 0; j < n; ++j) size *= static_cast<size_t>(deg + 1);
        a.assign(size, 0);
        std::vector<int> l(static_cast<size_t>(n), 0);
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                int tot = 0;
                for (int e : l) tot += e;
                if (tot <= deg) {
                    BigInt fp = 1;
                    for (int e : l) fp *= big_factorial(e);
                    BigInt m = big_factorial(tot) / fp;
                    a[index(l)] = m * m;
                }
                return;
            }
            for (int k = 0; k <= deg; ++k) {
                l[static_cast<size_t>(j)] = k;
                rec(j + 1);
            }
            l[static_cast<size_t>(j)] = 0;
        };
        rec(0);
    }
};

std::string describe(const std::vector<int>& l) {
    std::string s = "(";
    for (size_t j = 0; j < l.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(l[j]);
    }
    return s + ")";
}

// Visit all multi-indices with |l| <= deg.
void for_each_index(int n, int deg, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> l(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int j, int rem) {
        if (j == n - 1) {
            for (int k = 0; k <= rem; ++k) {
                l[static_cast<size_t>(j)] = k;
                f(l);
            }
            l[static_cast<size_t>(j)] = 0;
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            l[static_cast<size_t>(j)] = k;
            rec(j + 1, rem - k);
        }
        l[static_cast<size_t>(j)] = 0;
    };
    rec(0, deg);
}

}  // namespace

PdeCheckReport check_pde_coefficients(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("check_pde_coefficients: n >= 1");
    if (max_degree < 1) throw std::invalid_argument("check_pde_coefficients: max_degree >= 1");

    constexpr int kDeltaPowerMax = 3;
    CoeffTable tab{n, max_degree + kDeltaPowerMax, {}};
    tab.build();

    PdeCheckReport report;
    auto fail = [&](const std::string& what, const std::vector<int>& l) {
        if (report.ok) {
            report.ok = false;
            report.counterexample = what + " fails at l=" + describe(l);
        }
    };

    // (i) l_n^2 a_l = |l|^2 a_{l - e_n}
    for_each_index(n, max_degree, [&](const std::vector<int>& l) {
        int ln = l[static_cast<size_t>(n - 1)];
        if (ln < 1) return;
        int tot = 0;
        for (int e : l) tot += e;
        std::vector<int> lm = l;
        --lm[static_cast<size_t>(n - 1)];
        if (BigInt(ln) * ln * tab.a[tab.index(l)] !=
            BigInt(tot) * tot * tab.a[tab.index(lm)])
            fail("delta_n recurrence", l);
    });

    // (ii) k-fold (1/x_j) delta_j^2 gives coefficients ((|l|+k)!/l!)^2
    for (int k = 1; k <= kDeltaPowerMax; ++k) {
        for (int j = 0; j < n; ++j) {
            for_each_index(n, max_degree, [&](const std::vector<int>& l) {
                int tot = 0;
                for (int e : l) tot += e;
                std::vector<int> lk = l;
                lk[static_cast<size_t>(j)] += k;
                BigInt chain = 1;
                for (int m = 1; m <= k; ++m)
                    chain *= l[static_cast<size_t>(j)] + m;
                BigInt lhs = chain * chain * tab.a[tab.index(lk)];
                BigInt fp = 1;
                for (int e : l) fp *= big_factorial(e);
                BigInt ratio = big_factorial(tot + k) / fp;
                if (lhs != ratio * ratio) fail("delta-power identity", l);
            });
        }
    }

    // (iii) (l_1+1)^2 a_{l+e_1} = (l_2+1)^2 a_{l+e_2}
    if (n >= 2) {
        for_each_index(n, max_degree - 1, [&](const std::vector<int>& l) {
            std::vector<int> l1 = l, l2 = l;
            ++l1[0];
            ++l2[1];
            BigInt c1 = l[0] + 1, c2 = l[1] + 1;
            if (c1 * c1 * tab.a[tab.index(l1)] != c2 * c2 * tab.a[tab.index(l2)])
                fail("Cauchy cross identity", l);
        });
    }

    return report;
}

}  // namespace gnfam
