#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace arrc {

// Exact rational scalar. GMP keeps values canonical under arithmetic; the
// helpers below cover construction and the small combinatorial kernel the
// genus formulas consume.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int c = 1;
    for (long i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

inline Rat pow_rat(const Rat& q, long e) {
    Rat r = 1;
    Rat base = q;
    long n = e;
    if (n < 0) {
        if (q == 0) throw std::domain_error("zero to a negative power");
        base = rat(Int(q.get_den()), Int(q.get_num()));
        n = -n;
    }
    for (long i = 0; i < n; ++i) r *= base;
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace arrc
