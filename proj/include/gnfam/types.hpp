#ifndef GNFAM_TYPES_HPP
#define GNFAM_TYPES_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gnfam {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Error hierarchy. Every precondition failure carries the name of the
// violated precondition in the message.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct NonConvergenceError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ZeroCoordinateError : Error { using Error::Error; };
struct SingularQError : Error { using Error::Error; };
struct BranchCutError : Error { using Error::Error; };
struct BranchPathError : Error { using Error::Error; };
struct BranchError : Error { using Error::Error; };
struct UnsupportedDimensionError : Error { using Error::Error; };
struct ZeroX3Error : Error { using Error::Error; };
struct EvaluationError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// A point of C^n. Coordinates are stored 0-based; x(j) uses the 1-based
// index convention of the formulas.

class CPoint {
public:
    CPoint() = default;
    explicit CPoint(std::vector<Complex> coords) : c_(std::move(coords)) {
        if (c_.empty()) throw std::invalid_argument("CPoint: dimension must be >= 1");
    }
    CPoint(std::initializer_list<Complex> coords) : CPoint(std::vector<Complex>(coords)) {}

    int dim() const { return static_cast<int>(c_.size()); }
    Complex x(int j) const { return c_.at(static_cast<size_t>(j) - 1); }  // 1-based
    const std::vector<Complex>& coords() const { return c_; }

    CPoint first(int m) const {  // (x_1, ..., x_m)
        return CPoint(std::vector<Complex>(c_.begin(), c_.begin() + m));
    }

private:
    std::vector<Complex> c_;
};

// Truncation policy for shell-summed series: stop at the earlier of
// max_total_degree shells or estimated tail < target_tol; exceeding
// max_terms first is a ConvergenceError.
struct TruncationSpec {
    int max_total_degree = 120;
    double target_tol = 1e-13;
    std::int64_t max_terms = 50'000'000;
};

// Uniform evaluator result. terms_used counts series terms or quadrature
// nodes depending on the method.
struct Evaluation {
    Complex value{};
    double error_estimate = 0.0;
    std::int64_t terms_used = 0;
    int degree_reached = 0;
};

}  // namespace gnfam

#endif
