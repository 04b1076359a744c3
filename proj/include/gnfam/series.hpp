#ifndef GNFAM_SERIES_HPP
#define GNFAM_SERIES_HPP

#include <array>
#include <string>
#include <vector>

#include "gnfam/rational.hpp"
#include "gnfam/types.hpp"

namespace gnfam {

// Multi-index l = (l_1,...,l_n) of nonnegative integers, |l| its total
// degree and l! the product of entry factorials.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries)
        : MultiIndex(std::vector<int>(entries)) {}

    int order() const { return static_cast<int>(idx_.size()); }
    int total() const;
    const std::vector<int>& entries() const { return idx_; }
    BigInt factorial_product() const;  // l!

private:
    std::vector<int> idx_;
};

// (|l|!/l!)^2, exact.
BigInt gn_coefficient(const MultiIndex& l);

// Convergence domain of F_C and G_n: sum_j sqrt|x_j| < 1, strictly.
bool in_omega_n(const CPoint& x);

// Shell-by-shell summation of G_n(x) = sum (|l|!/l!)^2 x^l.
Evaluation eval_gn_series(const CPoint& x, const TruncationSpec& trunc = {});

// Lauricella F_C(alpha, beta, gamma_vec; x).
Evaluation eval_fc_series(Complex alpha, Complex beta,
                          const std::vector<Complex>& gamma, const CPoint& x,
                          const TruncationSpec& trunc = {});

// Appell F_4(alpha, beta, gamma, gamma'; x, y) — the n = 2 case of F_C.
Evaluation eval_f4_series(Complex alpha, Complex beta, Complex gamma,
                          Complex gamma_prime, Complex x, Complex y,
                          const TruncationSpec& trunc = {});

// First Appell series F_1(alpha, (beta_1, beta_2), gamma; x, y).
Evaluation eval_f1_series(Complex alpha, const std::array<Complex, 2>& beta,
                          Complex gamma, Complex x, Complex y,
                          const TruncationSpec& trunc = {});

// Second Appell series F_2(alpha, (beta_1, beta_2), (gamma_1, gamma_2); x, y).
Evaluation eval_f2_series(Complex alpha, const std::array<Complex, 2>& beta,
                          const std::array<Complex, 2>& gamma, Complex x,
                          Complex y, const TruncationSpec& trunc = {});

// Exact-integer verification of the coefficient identities behind the
// PDE structure of G_n, for all |l| <= max_degree:
//   (i)   l_n^2 a_l = |l|^2 a_{l - e_n}
//   (ii)  ((1/x_j) delta_j^2)^k G_n has coefficients ((|l|+k)!/l!)^2, k <= 3
//   (iii) (l_1+1)^2 a_{l+e_1} = (l_2+1)^2 a_{l+e_2}
struct PdeCheckReport {
    bool ok = true;
    std::string counterexample;
    explicit operator bool() const { return ok; }
};

PdeCheckReport check_pde_coefficients(int n, int max_degree);

}  // namespace gnfam

#endif
