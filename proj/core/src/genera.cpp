#include <arrc/genera.hpp>

namespace arrc::genera {

using graded::GradedElement;

GenusSeries::GenusSeries(int max_order) {
    if (max_order < 0) throw std::invalid_argument("negative series order");
    coeffs_.resize(max_order + 1);
}

const Constant& GenusSeries::coefficient(int k) const {
    if (k < 0 || k > max_order())
        throw std::invalid_argument("series coefficient index out of range");
    return coeffs_[k];
}

void GenusSeries::set_coefficient(int k, Constant c) {
    if (k < 0 || k > max_order())
        throw std::invalid_argument("series coefficient index out of range");
    coeffs_[k] = std::move(c);
}

GenusSeries operator*(const GenusSeries& a, const GenusSeries& b) {
    int order = std::min(a.max_order(), b.max_order());
    GenusSeries out(order);
    for (int k = 0; k <= order; ++k) {
        Constant s;
        for (int i = 0; i <= k; ++i) s += a.coefficient(i) * b.coefficient(k - i);
        out.set_coefficient(k, s);
    }
    return out;
}

GenusSeries todd_inv_series(int max_order) {
    GenusSeries s(max_order);
    for (int k = 0; k <= max_order; ++k) {
        Rat c = rat(Int((k % 2) ? -1 : 1), factorial(k + 1));
        s.set_coefficient(k, Constant(c));
    }
    return s;
}

GenusSeries todd_series(int max_order) {
    // invert (1 - e^{-x})/x as a power series; the result is
    // 1 + x/2 + sum_{k>=2} B_k x^k / k!
    GenusSeries d = todd_inv_series(max_order);
    GenusSeries s(max_order);
    s.set_coefficient(0, Constant(1));
    for (int k = 1; k <= max_order; ++k) {
        Constant acc;
        for (int i = 0; i < k; ++i) acc += s.coefficient(i) * d.coefficient(k - i);
        s.set_coefficient(k, Constant() - acc);
    }
    return s;
}

GenusSeries ch_series(int max_order) {
    GenusSeries s(max_order);
    for (int k = 0; k <= max_order; ++k)
        s.set_coefficient(k, Constant(rat(Int(1), factorial(k))));
    return s;
}

GenusSeries r_genus_series(int max_order) {
    if (max_order < 1) throw std::invalid_argument("r_genus_series requires max_order >= 1");
    GenusSeries s(max_order);
    for (int m = 1; m <= max_order; m += 2) {
        Constant c = Constant::symbol(TranscendentalSymbol::zeta_prime(m), rat(2));
        c += Constant(harmonic(m) * zeta_neg(m));
        c.scale(rat(Int(1), factorial(m)));
        s.set_coefficient(m, c);
    }
    return s;
}

GradedElement series_substitute(const GenusSeries& s, const GradedElement& x) {
    if (!x.constant_term().is_zero())
        throw std::invalid_argument("series_substitute requires zero degree-0 part");
    const auto& ring = x.ring();
    int order = std::min(s.max_order(), ring->truncation());
    GradedElement out = GradedElement::scalar(ring, s.coefficient(0));
    GradedElement xp = GradedElement::scalar(ring, Constant(1));
    for (int k = 1; k <= order; ++k) {
        xp = gr_mul(xp, x);
        if (xp.is_zero()) break;
        GradedElement term = xp;
        term.scale(s.coefficient(k));
        out += term;
    }
    return out;
}

GradedElement ch_mu2_factor(const GradedElement& n, int truncation) {
    if (truncation < 0 || truncation > 2)
        throw std::invalid_argument("ch_mu2_factor supports truncation 0..2 only");
    if (n.ring()->truncation() < truncation)
        throw std::invalid_argument("ring truncation too small for requested order");
    // (1 + e^n)^{-1}
    GradedElement en = series_substitute(ch_series(truncation), n);
    GradedElement one_plus = GradedElement::scalar(n.ring(), Constant(1)) + en;
    return graded::degree_upto(invert_unit(one_plus), truncation);
}

std::pair<Constant, Constant> r_g_equivariant_linear_coeffs() {
    // 6 zeta'(-1) + (3 - log 16) zeta(-1)  on c1(N)
    Constant on_n = Constant::symbol(TranscendentalSymbol::zeta_prime(1), rat(6));
    Constant three_minus_log16 = Constant(rat(3)) - log_rational(rat(16));
    three_minus_log16.scale(zeta_neg(1));
    on_n += three_minus_log16;
    // 2 zeta'(-1) + zeta(-1)  on c1(omega_g)
    Constant on_w = Constant::symbol(TranscendentalSymbol::zeta_prime(1), rat(2));
    on_w += Constant(zeta_neg(1));
    return {on_n, on_w};
}

GradedElement bott_chern_tilde(int k, const GradedElement& x) {
    if (k < 1) throw std::invalid_argument("bott_chern_tilde requires k >= 1");
    if (k == 1) return GradedElement::zero(x.ring());
    GradedElement out = graded::pow(x, k - 1);
    Rat c = harmonic(k - 1);
    if (k % 2 == 0) c = -c;  // sign (-1)^{k-1}
    out.scale(Constant(c));
    return out;
}

GradedElement todd_tilde_universal(long g, const GradedElement& x) {
    if (g < 2) throw std::invalid_argument("todd_tilde_universal requires g >= 2");
    GradedElement out = GradedElement::zero(x.ring());
    // tilde c_1 vanishes; odd Bernoulli numbers vanish from k = 3 on
    for (long k = 2; k <= g; ++k) {
        Rat bk = bernoulli(k);
        if (bk == 0) continue;
        GradedElement term = bott_chern_tilde(static_cast<int>(k), x);
        term.scale(Constant(bk / rat(factorial(k), Int(1))));
        out += term;
    }
    return out;
}

}  // namespace arrc::genera
