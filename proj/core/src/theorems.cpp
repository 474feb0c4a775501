#include <arrc/theorems.hpp>

#include <arrc/theta.hpp>

namespace arrc::theorems {

using graded::GradedElement;
using graded::Generator;
using graded::Locus;
using graded::Ring;
using graded::RingPtr;

VerificationResult make_result(std::string id, std::string param_name, long param,
                               GradedElement pipeline, GradedElement closed) {
    GradedElement residual = pipeline - closed;
    bool equal = residual.is_zero();
    return {std::move(id), std::move(param_name), param,
            std::move(pipeline), std::move(closed), equal, std::move(residual)};
}

RingPtr scalar_ring() { return Ring::make({}, 0); }

namespace {

GradedElement as_scalar(const Constant& c) {
    return GradedElement::scalar(scalar_ring(), c);
}

Rat sign_pow(long g) { return (g % 2 == 0) ? rat(1) : rat(-1); }

// integral of Td^{-1}(Q) Td-tilde(E) over the projective fiber, computed by
// the ring machinery as the x^{g-1} coefficient
Constant lemma23_pipeline(long g) {
    auto ring = Ring::make({{"x", Locus::fiber, 1}}, static_cast<int>(g - 1));
    GradedElement x = GradedElement::generator(ring, "x");
    GradedElement tdinv = genera::series_substitute(genera::todd_inv_series(static_cast<int>(g - 1)), x);
    GradedElement integrand = tdinv * genera::todd_tilde_universal(g, x);
    graded::Monomial top{static_cast<int>(g - 1)};
    return integrand.coefficient(top);
}

Constant lemma23_closed(long g) {
    Constant sum;
    for (long p = 0; 2 * p + 1 <= g - 1; ++p) {
        Rat c = zeta_neg(2 * p + 1) * harmonic(2 * p + 1);
        c /= rat(factorial(2 * p + 1) * factorial(g - 2 * p - 1), Int(1));
        sum += Constant(c);
    }
    sum.scale(sign_pow(g));
    return sum;
}

Constant r_integral_pipeline(long g) {
    auto ring = Ring::make({{"x", Locus::fiber, 1}}, static_cast<int>(g - 1));
    GradedElement x = GradedElement::generator(ring, "x");
    GradedElement r = genera::series_substitute(genera::r_genus_series(std::max<long>(1, g - 1)), x);
    GradedElement tdinv = genera::series_substitute(genera::todd_inv_series(static_cast<int>(g - 1)), x);
    GradedElement integrand = r * tdinv;
    graded::Monomial top{static_cast<int>(g - 1)};
    Constant c = integrand.coefficient(top);
    c.scale(rat(-1));
    return c;
}

Constant r_integral_closed(long g) {
    Constant sum;
    for (long k = 0; 2 * k + 1 <= g - 1; ++k) {
        Constant term = Constant::symbol(TranscendentalSymbol::zeta_prime(2 * k + 1), rat(2));
        term += Constant(zeta_neg(2 * k + 1) * harmonic(2 * k + 1));
        term.scale(sign_pow(g) / rat(factorial(2 * k + 1) * factorial(g - 2 * k - 1), Int(1)));
        sum -= term;
    }
    return sum;
}

}  // namespace

VerificationResult lemma23(long g) {
    if (g < 2) throw std::domain_error("lemma23 requires g >= 2");
    return make_result("lemma23", "g", g, as_scalar(lemma23_pipeline(g)),
                       as_scalar(lemma23_closed(g)));
}

VerificationResult r_integral(long g) {
    if (g < 2) throw std::domain_error("r_integral requires g >= 2");
    return make_result("r_integral", "g", g, as_scalar(r_integral_pipeline(g)),
                       as_scalar(r_integral_closed(g)));
}

VerificationResult theorem24(long g) {
    if (g < 2) throw std::domain_error("theorem24 requires g >= 2");
    const Rat sg = sign_pow(g);
    const Rat gfact = rat(factorial(g), Int(1));

    // fiber-wise integrals, pipeline route
    Constant l23 = lemma23_pipeline(g);
    Constant rint = r_integral_pipeline(g);

    // arithmetic pushforward block g! p_*(Td^{-1}(Q) Td(p^* TA_0))^{[<=1]};
    // input degrees above g land outside the degree-<=1 window downstairs
    auto ring_p = Ring::make({{"x", Locus::fiber, 1}, {"t", Locus::base, 1}},
                             static_cast<int>(g));
    GradedElement x = GradedElement::generator(ring_p, "x");
    GradedElement t = GradedElement::generator(ring_p, "t");
    GradedElement tdinv = genera::series_substitute(genera::todd_inv_series(static_cast<int>(g)), x);
    GradedElement td_base = GradedElement::scalar(ring_p, Constant(1));
    {
        GradedElement half_t = t;
        half_t.scale(Constant(rat(1, 2)));
        td_base += half_t;  // Td(TA_0) cut to degree <= 1, rank parts split off
    }
    auto table = graded::projective_pushforward_table(ring_p, g, "t", "cst", 1);
    GradedElement block = graded::pushforward(tdinv * td_base, table);
    block.scale(Constant(gfact));

    // rank bookkeeping: the degree-0 part of the block must equal the Euler
    // characteristic sum -(-1)^g coming from the long exact sequence
    if (!(block.constant_term() == Constant(-sg)))
        throw std::logic_error("theorem24: rank part of the pushforward block is inconsistent");

    // degree-1 assembly: Chern input of the direct image minus the block
    GradedElement deg1 = GradedElement::generator(block.ring(), "t");
    deg1.scale(Constant(-sg));  // (-1)^{g+1} c1(TA_0)
    deg1 -= graded::degree_part(block, 1);

    // pass to the Hodge-bundle generator w = c1(omega) = -c1(TA_0) and fold
    // the analytic line back onto the scalar term (no products follow)
    auto ring_w = Ring::make({{"w", Locus::base, 1}}, 1);
    GradedElement w = GradedElement::generator(ring_w, "w");
    GradedElement minus_w = -w;
    std::map<std::string, GradedElement> images{
        {"t", minus_w}, {"cst", GradedElement::scalar(ring_w, Constant(1))}};
    GradedElement pipeline = graded::apply_hom(deg1, ring_w, images);

    Constant scalar_block;
    scalar_block -= l23 * Constant(gfact);
    scalar_block += rint * Constant(gfact);
    scalar_block -= lambda_parity_constant(g);
    pipeline += GradedElement::scalar(ring_w, scalar_block);

    // closed form: the theorem display
    Rat hsum = 0;
    for (long l = 1; l <= g - 1; ++l) hsum += harmonic(l);
    Constant closed_const(-sg / rat(g + 1) * hsum);
    Constant zeta_block;
    for (long k = 0; 2 * k + 1 <= g - 1; ++k) {
        Constant term = Constant::symbol(TranscendentalSymbol::zeta_prime(2 * k + 1), rat(1));
        term += Constant(zeta_neg(2 * k + 1) * harmonic(2 * k + 1));
        term.scale(rat(binomial(g, 2 * k + 1), Int(1)));
        zeta_block += term;
    }
    zeta_block.scale(rat(-2) * sg);
    closed_const += zeta_block;
    closed_const -= lambda_parity_constant(g);

    GradedElement closed = w;
    closed.scale(Constant(sg * rat(g + 3) / rat(2 * g + 2)));
    closed += GradedElement::scalar(ring_w, closed_const);

    return make_result("theorem24", "g", g, std::move(pipeline), std::move(closed));
}

Rat even_count_for_prop31(long g) {
    if (g <= 6) {
        auto evens = theta::enumerate_characteristics(g, theta::Parity::even);
        return rat(static_cast<long>(evens.size()));
    }
    Int n = (Int(1) << (2 * g - 1)) + (Int(1) << (g - 1));
    return rat(n, Int(1));
}

VerificationResult prop31(long g) {
    if (g < 2) throw std::domain_error("prop31 requires g >= 2");
    auto ring_w = Ring::make({{"w", Locus::base, 1}}, 1);
    GradedElement w = GradedElement::generator(ring_w, "w");
    Constant log4pi = log_rational(rat(4)) + Constant::symbol(TranscendentalSymbol::log_pi());

    // pipeline: theorem of the cube + key formula, summed over the even
    // two-torsion sections
    Rat n_even = even_count_for_prop31(g);
    GradedElement pipeline = w;
    pipeline.scale(Constant(rat(4)));
    Constant metric_term = log4pi;
    metric_term.scale(rat(2 * g));
    pipeline += GradedElement::scalar(ring_w, metric_term);
    pipeline.scale(Constant(n_even / rat(8)));

    // closed form: displayed coefficients
    Rat c_omega = rat((Int(1) << (2 * g - 2)) + (Int(1) << (g - 2)), Int(1));
    Rat c_log = rat(g, 4) * rat((Int(1) << (2 * g - 1)) + (Int(1) << (g - 1)), Int(1));
    GradedElement closed = w;
    closed.scale(Constant(c_omega));
    Constant log_term = log4pi;
    log_term.scale(c_log);
    closed += GradedElement::scalar(ring_w, log_term);

    return make_result("prop31", "g", g, std::move(pipeline), std::move(closed));
}

std::vector<VerificationResult> section4_assemble() {
    std::vector<VerificationResult> out;

    // ring on the fixed locus, truncation 2
    auto ring_t = Ring::make({{"n", Locus::fiber, 1},
                              {"w", Locus::fiber, 1},
                              {"eta", Locus::fiber, 1},
                              {"lambda", Locus::base, 1}},
                             2);
    GradedElement n = GradedElement::generator(ring_t, "n");
    GradedElement w = GradedElement::generator(ring_t, "w");
    GradedElement eta = GradedElement::generator(ring_t, "eta");
    GradedElement lambda_up = GradedElement::generator(ring_t, "lambda");

    // equivariant Todd through truncation 2
    GradedElement chm = genera::ch_mu2_factor(n, 2);
    GradedElement tdf = genera::series_substitute(genera::todd_series(2), -w);
    GradedElement td_eq = chm * tdf;
    GradedElement ss = graded::degree_part(td_eq, 2);

    // displayed degree-2 part: (1/8) n w + (1/24) w^2
    GradedElement ss_closed = n * w;
    ss_closed.scale(Constant(rat(1, 8)));
    {
        GradedElement w2 = w * w;
        w2.scale(Constant(rat(1, 24)));
        ss_closed += w2;
    }
    out.push_back(make_result("section4.ss", "", 0, ss, ss_closed));

    // conormal relation and fiber integration
    GradedElement ss_sub = graded::substitute(ss, "n", lambda_up - eta - w);

    auto ring_b = Ring::make({{"G", Locus::base, 0},
                              {"lambda", Locus::base, 1},
                              {"lambda_g", Locus::base, 1},
                              {"w2", Locus::base, 1},
                              {"weta", Locus::base, 1},
                              {"T_mu2", Locus::base, 1},
                              {"T_fix", Locus::base, 1},
                              {"logvol", Locus::base, 1},
                              {"logvol_g", Locus::base, 1}},
                             1);
    auto bgen = [&](const char* name) { return GradedElement::generator(ring_b, name); };
    GradedElement g_sym = bgen("G");

    graded::PushforwardTable table{ring_b, {}};
    table.images.emplace(graded::Monomial{0, 0, 0}, GradedElement::zero(ring_b));
    table.images.emplace(graded::Monomial{0, 1, 0}, g_sym);
    table.images.emplace(graded::Monomial{0, 2, 0}, bgen("w2"));
    table.images.emplace(graded::Monomial{0, 1, 1}, bgen("weta"));
    GradedElement pushed = graded::pushforward(ss_sub, table);

    // R_g block on the fixed curves: linear part integrated with
    // c1(N) = -c1(omega_g) under the fiber integral
    auto [c_n, c_w] = genera::r_g_equivariant_linear_coeffs();
    auto ring_g = Ring::make({{"n", Locus::fiber, 1}, {"w", Locus::fiber, 1}}, 1);
    GradedElement rg_lin = GradedElement::generator(ring_g, "n");
    rg_lin.scale(c_n);
    {
        GradedElement ww = GradedElement::generator(ring_g, "w");
        ww.scale(c_w);
        rg_lin += ww;
    }
    rg_lin = graded::substitute(rg_lin, "n", -GradedElement::generator(ring_g, "w"));
    graded::PushforwardTable table_g{ring_b, {}};
    table_g.images.emplace(graded::Monomial{0, 0}, GradedElement::zero(ring_b));
    table_g.images.emplace(graded::Monomial{0, 1}, g_sym);
    GradedElement rg_block = graded::pushforward(rg_lin, table_g);
    rg_block.scale(Constant(rat(-2)));  // this is the integral of Td_g R_g

    // main display: both routes express -log Vol(T)
    GradedElement pipeline_v = pushed - rg_block + bgen("T_mu2") - bgen("lambda");

    GradedElement closed_v = g_sym * bgen("lambda");
    closed_v.scale(Constant(rat(1, 8)));
    closed_v -= bgen("lambda");
    {
        GradedElement s = bgen("w2");
        s.scale(Constant(rat(-1, 12)));
        closed_v += s;
    }
    {
        // 2G(-4 zeta'(-1) + (log 16 - 2) zeta(-1))
        Constant cblk = Constant::symbol(TranscendentalSymbol::zeta_prime(1), rat(-4));
        Constant l16 = log_rational(rat(16)) - Constant(rat(2));
        l16.scale(zeta_neg(1));
        cblk += l16;
        cblk.scale(rat(2));
        GradedElement gb = g_sym;
        gb.scale(cblk);
        closed_v += gb;
    }
    closed_v += bgen("T_mu2");
    {
        GradedElement i = bgen("weta");
        i.scale(Constant(rat(-1, 8)));
        closed_v += i;
    }
    out.push_back(make_result("section4.theorem41", "", 0, pipeline_v, closed_v));

    // combined identity: eliminate the omega_mu2 square through the second
    // Riemann-Roch input and move the volume terms across
    GradedElement rg2 = g_sym;
    {
        Constant c = Constant::symbol(TranscendentalSymbol::zeta_prime(1), rat(2));
        c += Constant(zeta_neg(1));
        rg2.scale(c);
    }
    GradedElement sub_identity =
        bgen("T_fix") + bgen("logvol_g") - bgen("lambda_g") + rg2;  // equals -(1/12) w2
    GradedElement minus12_sub = sub_identity;
    minus12_sub.scale(Constant(rat(-12)));
    GradedElement eliminated = graded::substitute(pipeline_v, "w2", minus12_sub);

    // left side lambda_g + (8 - G)/8 lambda
    GradedElement lhs = bgen("lambda_g") + bgen("lambda");
    {
        GradedElement gpart = g_sym * bgen("lambda");
        gpart.scale(Constant(rat(1, 8)));
        lhs -= gpart;
    }
    GradedElement pipeline_combined = lhs + eliminated + bgen("logvol");

    GradedElement closed_combined = bgen("T_mu2") + bgen("T_fix");
    {
        GradedElement i = bgen("weta");
        i.scale(Constant(rat(-1, 8)));
        closed_combined += i;
    }
    closed_combined += bgen("logvol") + bgen("logvol_g");
    {
        Constant cb = Constant::symbol(TranscendentalSymbol::zeta_prime(1), rat(-6));
        cb -= log_rational(rat(2)).scale(rat(2, 3));
        cb += Constant(rat(1, 4));
        GradedElement gb = g_sym;
        gb.scale(cb);
        closed_combined += gb;
    }
    out.push_back(make_result("section4.combined", "", 0, pipeline_combined, closed_combined));

    return out;
}

long euler_characteristic_g(long r_plus) {
    if (r_plus < 0 || r_plus > 22)
        throw std::domain_error("r_plus must lie in 0..22");
    return 20 - 2 * r_plus;
}

}  // namespace arrc::theorems
