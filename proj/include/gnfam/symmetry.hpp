#ifndef GNFAM_SYMMETRY_HPP
#define GNFAM_SYMMETRY_HPP

#include <span>
#include <vector>

#include "gnfam/rational.hpp"
#include "gnfam/types.hpp"

namespace gnfam {

// Q_n(x) = (1 - sum x_j)^2 - 4 sum_{i<j} x_i x_j, over any field.
template <class T>
T qn_value(std::span<const T> x) {
    T s{};
    for (const T& c : x) s += c;
    T cross{};
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) cross += x[i] * x[j];
    T one_minus = T(1) - s;
    return one_minus * one_minus - T(4) * cross;
}

// T_{n,j} x = (xbar'_{j-1}/x_j, 1/x_j, xbar_{j+1}/x_j), 1-based j.
template <class T>
std::vector<T> t_involution_point(int j, std::span<const T> x) {
    const int n = static_cast<int>(x.size());
    if (j < 1 || j > n) throw std::invalid_argument("t_involution: j out of range");
    const T& pivot = x[static_cast<size_t>(j) - 1];
    if (pivot == T(0)) throw ZeroCoordinateError("t_involution: x_j = 0");
    std::vector<T> out(x.size());
    for (int k = 0; k < n; ++k)
        out[static_cast<size_t>(k)] =
            (k == j - 1) ? T(1) / pivot : x[static_cast<size_t>(k)] / pivot;
    return out;
}

// u(x) = 64 x_1 x_2 x_3 / Q_3(x)^2, n = 3 only.
template <class T>
T u_invariant_value(std::span<const T> x) {
    if (x.size() != 3) throw std::invalid_argument("u_invariant: n must be 3");
    T q = qn_value(x);
    if (q == T(0)) throw SingularQError("u_invariant: Q_3(x) = 0");
    return T(64) * x[0] * x[1] * x[2] / (q * q);
}

Complex qn(const CPoint& x);
Rational qn(const RationalPoint& x);
CPoint t_involution(int j, const CPoint& x);
RationalPoint t_involution(int j, const RationalPoint& x);
Complex u_invariant(const CPoint& x);
Rational u_invariant(const RationalPoint& x);

// Exact rational identity Q_n(T_{n,j} x) x_j^2 = Q_n(x).
bool verify_q_covariance(int j, const RationalPoint& x);

// Exact rational identity u(T_{3,j} x) = u(x).
bool verify_u_invariance(int j, const RationalPoint& x);

// A word in the generators of the symmetry group: involutions T_{n,j} and
// coordinate permutations.  Letters apply right to left.
struct TransformWord {
    struct Letter {
        int involution = 0;         // j >= 1 when an involution
        std::vector<int> perm;      // 0-based image when a permutation
    };
    std::vector<Letter> letters;

    static Letter inv(int j) { return Letter{j, {}}; }
    static Letter permutation(std::vector<int> p) { return Letter{0, std::move(p)}; }

    template <class T>
    std::vector<T> apply(std::vector<T> x) const {
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            if (it->involution > 0) {
                x = t_involution_point<T>(it->involution, x);
            } else {
                std::vector<T> y(x.size());
                for (size_t k = 0; k < x.size(); ++k)
                    y[k] = x[static_cast<size_t>(it->perm[k])];
                x = std::move(y);
            }
        }
        return x;
    }
};

// sqrt(Q_n) continued along the straight segment from 0 (where Q_n = 1 and
// the root is anchored at +1) to x, stepping so the argument of Q_n moves by
// at most pi/4 per step.  Throws BranchPathError if the segment meets
// {Q_n = 0} or, for n = 3, {u in [1, inf)}.
Complex sqrt_qn_tracked(const CPoint& x);

// Branch-tracked closed-form G_n for n in {2, 3}.
Complex gn_tracked(const CPoint& x);

// |G_n(T_{n,j} x) + x_j G_n(x)| with branch-tracked closed forms, n in {2,3}.
double verify_quasi_invariance(int n, int j, const CPoint& x, double tol = 1e-12);

// |H_n(T_{n,j} x) - H_n(x)| with the tracked branch on both sides.
double hn_invariance_residual(int j, const CPoint& x);

// H_n(x) = sqrt(Q_n(x)) G_n(x), principal branch, n <= 3.
Complex hn(const CPoint& x);

}  // namespace gnfam

#endif
