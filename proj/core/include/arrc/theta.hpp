#pragma once

#include <arrc/bigreal.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace arrc::theta {

enum class Parity { even, odd, all };

// Half-integer characteristic (a, b), entries stored in units of 1/2.
struct ThetaCharacteristic {
    std::vector<int> a;  // 0 or 1
    std::vector<int> b;

    long genus() const { return static_cast<long>(a.size()); }
    // 4 a^T b mod 2, i.e. the number of coordinates with a_i = b_i = 1/2
    int parity() const;
    bool is_even() const { return parity() == 0; }
    std::string to_string() const;
};

std::vector<ThetaCharacteristic> enumerate_characteristics(long g, Parity filter);

// Point of the Siegel upper half-space with its evaluation precision.
// Construction validates symmetry and positive-definiteness of the
// imaginary part.
class SiegelPoint {
public:
    SiegelPoint(long g, std::vector<Complex> omega_row_major, long digits);

    long genus() const { return g_; }
    long digits() const { return digits_; }
    const Complex& at(long i, long j) const { return omega_[i * g_ + j]; }
    const std::vector<Complex>& entries() const { return omega_; }
    // certified lower bound for the smallest eigenvalue of Im(Omega)
    const Real& min_im_eigenvalue() const { return lambda_min_; }

private:
    long g_;
    long digits_;
    std::vector<Complex> omega_;
    Real lambda_min_;
};

struct ThetaValue {
    Complex value;
    Real tail_bound;
    long radius;
};

// theta[a,b](0, Omega) as a truncated lattice sum; the truncation radius is
// chosen from the tail bound C(g) exp(-pi lambda_min (R - 1/2)^2) so the
// omitted mass stays below 10^{-digits}. radius_override forces a larger
// radius (used by the stability tests).
ThetaValue theta_constant(const ThetaCharacteristic& ch, const SiegelPoint& omega,
                          long radius_override = 0);

// Igusa's product of the even theta constants.
Complex chi(const SiegelPoint& omega);

// det(Im Omega)^{(2^{2g-2} + 2^{g-2})/2} |chi_g(Omega)|
Real petersson_norm_chi(const SiegelPoint& omega);

// Symplectic action (A Omega + B)(C Omega + D)^{-1}; gamma is an integer
// 2g x 2g matrix, row-major, checked against gamma^T J gamma = J.
SiegelPoint sp_transform(const SiegelPoint& omega, const std::vector<long>& gamma);

bool is_symplectic(const std::vector<long>& gamma, long g);

// Deterministic generator used by the seeded invariance suites.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    double uniform();         // [0, 1)
    double uniform_sym();     // [-1, 1]
    long below(long n);       // {0, ..., n-1}
};

// Omega = B + i(M^T M + I/2) with B symmetric and M drawn entrywise from
// [-1, 1]; keeps the smallest eigenvalue of the imaginary part at least 1/2.
SiegelPoint random_siegel_point(long g, long digits, Rng& rng);

std::vector<long> random_symplectic(long g, Rng& rng);

}  // namespace arrc::theta
