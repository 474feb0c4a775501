#pragma once

#include <arrc/bigreal.hpp>
#include <arrc/constants.hpp>

namespace arrc::num {

// Riemann zeta for real s > 1, Euler-Maclaurin with adaptive tail order.
Real zeta(const Real& s, long digits);

// zeta'(s) for real s > 1, the term-wise differentiated Euler-Maclaurin sum.
Real zeta_deriv(const Real& s, long digits);

// zeta'(-m) for odd m >= 1 through the differentiated functional equation
//   zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s),
// with psi at integer arguments taken as H_m - gamma and zeta(-m) exact.
Real zeta_deriv_neg(long m, long digits);

Real euler_gamma(long digits);

// Numeric value of a transcendental symbol, cached per (symbol, digits).
Real symbol_value(const TranscendentalSymbol& s, long digits);

// rational part + sum coeff * symbol value, carried at digits + guard.
Real eval_constant(const Constant& c, long digits);

}  // namespace arrc::num
