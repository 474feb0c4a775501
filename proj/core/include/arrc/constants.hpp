#pragma once

#include <arrc/rational.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace arrc {

// Thrown when a product would require multiplying two transcendental parts.
// No identity verified by this library ever needs such a product, so it is
// treated as a modeling error rather than extended to a full symbolic algebra.
class symbolic_product_error : public std::domain_error {
public:
    symbolic_product_error()
        : std::domain_error("product of two constants with nonempty symbolic parts") {}
};

// One of the transcendental numbers the identities are phrased in:
// log p (p prime), log pi, or zeta'(-m) for odd m >= 1.
class TranscendentalSymbol {
public:
    enum class Kind { LogPi = 0, LogPrime = 1, ZetaPrime = 2 };

    static TranscendentalSymbol log_pi() { return {Kind::LogPi, 0}; }

    static TranscendentalSymbol log_prime(long p) {
        if (!is_prime(Int(p))) throw std::domain_error("log_prime requires a prime argument");
        return {Kind::LogPrime, p};
    }

    static TranscendentalSymbol zeta_prime(long m) {
        if (m < 1 || m % 2 == 0)
            throw std::domain_error("zeta_prime argument must be odd and >= 1");
        return {Kind::ZetaPrime, m};
    }

    Kind kind() const { return kind_; }
    long arg() const { return arg_; }

    // Canonical order: log(pi), then prime logs ascending, then zp ascending.
    friend auto operator<=>(const TranscendentalSymbol&, const TranscendentalSymbol&) = default;

    std::string to_string() const;

private:
    TranscendentalSymbol(Kind k, long a) : kind_(k), arg_(a) {}
    Kind kind_;
    long arg_;
};

// Exact scalar: a rational plus a rational-linear combination of
// transcendental symbols. Addition and rational scaling are closed;
// a product is only defined when at least one factor is purely rational.
class Constant {
public:
    Constant() : rational_(0) {}
    Constant(const Rat& r) : rational_(r) {}
    Constant(long n) : rational_(rat(n)) {}

    static Constant symbol(const TranscendentalSymbol& s, const Rat& coeff = Rat(1));

    const Rat& rational_part() const { return rational_; }
    const std::map<TranscendentalSymbol, Rat>& symbolic_part() const { return symbolic_; }
    Rat coeff(const TranscendentalSymbol& s) const;

    bool is_zero() const { return rational_ == 0 && symbolic_.empty(); }
    bool is_rational() const { return symbolic_.empty(); }

    Constant& operator+=(const Constant& rhs);
    Constant& operator-=(const Constant& rhs);
    Constant& operator*=(const Constant& rhs);  // throws symbolic_product_error
    Constant& scale(const Rat& r);

    friend Constant operator+(Constant a, const Constant& b) { return a += b; }
    friend Constant operator-(Constant a, const Constant& b) { return a -= b; }
    friend Constant operator*(Constant a, const Constant& b) { return a *= b; }
    friend Constant operator-(const Constant& a) {
        Constant r;
        return r - a;
    }

    friend bool operator==(const Constant& a, const Constant& b) {
        return a.rational_ == b.rational_ && a.symbolic_ == b.symbolic_;
    }

    // Canonical exchange form, e.g. "-1/6 - 1*log(2) - 4*zp(1)".
    std::string to_string() const;
    static Constant parse(const std::string& text);

private:
    void prune();
    Rat rational_;
    std::map<TranscendentalSymbol, Rat> symbolic_;
};

// H_n = sum_{k=1..n} 1/k, with H_0 = 0 as the empty sum.
Rat harmonic(long n);

// B_n with the B_1 = -1/2 convention, so B_k = -k zeta(1-k) for k >= 2.
Rat bernoulli(long n);

// zeta(-m) = -B_{m+1}/(m+1), exact.
Rat zeta_neg(long m);

// log q for q > 0 rational, normalized onto prime logarithms.
Constant log_rational(const Rat& q);

// log of the alternating double-factorial ratio g(g-2).../( (g-1)(g-3)... ),
// the L2-normalization constant entering the torsion identity.
Constant lambda_parity_constant(long g);

}  // namespace arrc
