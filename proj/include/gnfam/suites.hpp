#ifndef GNFAM_SUITES_HPP
#define GNFAM_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gnfam/types.hpp"

namespace gnfam::suites {

// Deterministic uniform doubles built from raw mt19937_64 words, so seeded
// runs are byte-identical across standard libraries.
class UniformSampler {
public:
    explicit UniformSampler(std::uint64_t seed) : rng_(seed) {}
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double in(double a, double b) { return a + (b - a) * unit(); }
    Complex box(double m) { return Complex(in(-m, m), in(-m, m)); }

private:
    std::mt19937_64 rng_;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    double worst_residual = 0.0;  // 0 for exact suites
    int cases = 0;
    std::string first_failure;
};

struct SuiteConfig {
    std::uint64_t seed = 7;
    int n = 0;           // 0 = every applicable n
    int max_degree = 12;
};

SuiteResult run_pde(const SuiteConfig& cfg);
SuiteResult run_qcov(const SuiteConfig& cfg);
SuiteResult run_uinv(const SuiteConfig& cfg);
SuiteResult run_quasi(const SuiteConfig& cfg);
SuiteResult run_elliptic(const SuiteConfig& cfg);
SuiteResult run_riccati(const SuiteConfig& cfg);
SuiteResult run_appell(const SuiteConfig& cfg);
SuiteResult run_legendre(const SuiteConfig& cfg);

std::vector<SuiteResult> run_all(const SuiteConfig& cfg);
std::vector<SuiteResult> run_by_name(const std::string& suite, const SuiteConfig& cfg);
std::vector<std::string> suite_names();

}  // namespace gnfam::suites

#endif
