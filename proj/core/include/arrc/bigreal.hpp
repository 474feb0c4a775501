#pragma once

#include <arrc/rational.hpp>

#include <mpfr.h>

#include <string>
#include <utility>

namespace arrc {

// Arbitrary-precision real, value semantics over mpfr. Precision is fixed at
// construction; mixed-precision operations work at the wider operand.
class Real {
public:
    explicit Real(mpfr_prec_t prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
    Real(long n, mpfr_prec_t prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(double d, mpfr_prec_t prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(const Rat& q, mpfr_prec_t prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const std::string& s, mpfr_prec_t prec_bits) {
        mpfr_init2(v_, prec_bits);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("cannot parse real literal: " + s);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static mpfr_prec_t wider(const Real& a, const Real& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(wider(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(wider(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(wider(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(wider(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    Real operator-() const { Real r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // plain decimal with the requested number of significant digits
    std::string to_string(long digits) const;

private:
    mpfr_t v_;
};

inline Real abs(const Real& a) {
    Real r(a.precision()); mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline Real sqrt(const Real& a) {
    Real r(a.precision()); mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline Real log(const Real& a) {
    Real r(a.precision()); mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline Real exp(const Real& a) {
    Real r(a.precision()); mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline Real sin(const Real& a) {
    Real r(a.precision()); mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline Real cos(const Real& a) {
    Real r(a.precision()); mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(Real::wider(a, b)); mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(a.precision()); mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN); return r;
}
inline Real gamma_fn(const Real& a) {
    Real r(a.precision()); mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN); return r;
}

inline Real const_pi(mpfr_prec_t prec) {
    Real r(prec); mpfr_const_pi(r.raw(), MPFR_RNDN); return r;
}
inline Real const_log2(mpfr_prec_t prec) {
    Real r(prec); mpfr_const_log2(r.raw(), MPFR_RNDN); return r;
}
inline Real const_euler(mpfr_prec_t prec) {
    Real r(prec); mpfr_const_euler(r.raw(), MPFR_RNDN); return r;
}

// decimal digits -> working precision in bits, with the guard digits all
// intermediate computations are required to carry
inline mpfr_prec_t bits_for_digits(long digits) {
    if (digits < 1) throw std::domain_error("digit count must be positive");
    return static_cast<mpfr_prec_t>((digits + 10) * 3.3219280948873623 + 16);
}

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

inline Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

// e^{x + iy} = e^x (cos y + i sin y)
inline Complex cexp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

}  // namespace arrc
