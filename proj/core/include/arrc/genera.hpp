#pragma once

#include <arrc/graded.hpp>

#include <utility>
#include <vector>

namespace arrc::genera {

// Univariate formal power series over Constant, defined through max_order.
class GenusSeries {
public:
    explicit GenusSeries(int max_order);

    int max_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Constant& coefficient(int k) const;
    void set_coefficient(int k, Constant c);

    friend GenusSeries operator*(const GenusSeries& a, const GenusSeries& b);
    friend bool operator==(const GenusSeries&, const GenusSeries&) = default;

private:
    std::vector<Constant> coeffs_;
};

// Td(x) = x/(1 - e^{-x})
GenusSeries todd_series(int max_order);

// Td^{-1}(x) = (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)!
GenusSeries todd_inv_series(int max_order);

// ch of a line bundle: e^x
GenusSeries ch_series(int max_order);

// Gillet-Soule R genus: odd coefficients (2 zeta'(-m) + H_m zeta(-m))/m!
GenusSeries r_genus_series(int max_order);

// sum_k s_k x^k truncated in the ring of x; x must have no degree-0 part.
graded::GradedElement series_substitute(const GenusSeries& s, const graded::GradedElement& x);

// The mu_2-equivariant Chern character factor ch_{mu2}(1 - N)^{-1} = (1 + e^n)^{-1}
// for the conormal class n (eigenvalue -1). Supported through truncation 2.
graded::GradedElement ch_mu2_factor(const graded::GradedElement& n, int truncation);

// Linear coefficients of the degree-1 part of Td_g R_g for the mu_2 action,
// with the Lerch special values already reduced to zeta'(-1), zeta(-1) and
// log 16: returns (coefficient on c1(N), coefficient on c1(omega_g)).
std::pair<Constant, Constant> r_g_equivariant_linear_coeffs();

// Bott-Chern secondary classes of the universal sequence on P^{g-1}:
// tilde c_1 = 0 and tilde c_k = (-1)^{k-1} H_{k-1} x^{k-1} for k >= 2.
graded::GradedElement bott_chern_tilde(int k, const graded::GradedElement& x);

// Td-tilde of the universal sequence: (1/2) tilde c_1 + sum_{k=2}^{g} B_k/k! tilde c_k.
graded::GradedElement todd_tilde_universal(long g, const graded::GradedElement& x);

}  // namespace arrc::genera
