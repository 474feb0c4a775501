#include <arrc/numerics.hpp>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace arrc::num {

namespace {

// Working digits for intermediates: requested + guard.
long guarded(long digits) { return digits + 10; }

// Bernoulli numbers extended on demand, so the correction loops stay
// quadratic in the number of terms actually used.
class BernoulliSequence {
public:
    const Rat& at(long n) {
        if (values_.empty()) {
            values_.push_back(rat(1));
            values_.push_back(rat(-1, 2));
        }
        while (static_cast<long>(values_.size()) <= n) {
            long m = static_cast<long>(values_.size());
            Rat s = 0;
            for (long k = 0; k < m; ++k) s += rat(binomial(m + 1, k), Int(1)) * values_[k];
            values_.push_back(-s / rat(m + 1));
        }
        return values_[n];
    }

private:
    std::vector<Rat> values_;
};

struct EmParams {
    long cutoff;  // Dirichlet cutoff N
    long order;   // number of Bernoulli correction terms K
};

// Conservative choice: with N ~ 1.5 D + 24 the correction terms shrink by
// roughly (2k/(2 pi N))^2 per step, so they pass 10^{-D-5} well before the
// asymptotic series could turn.
EmParams em_params(long digits) {
    long n = static_cast<long>(1.5 * digits) + 24;
    long k = digits + 16;
    return {n, k};
}

}  // namespace

Real zeta(const Real& s, long digits) {
    const long wd = guarded(digits);
    const mpfr_prec_t prec = bits_for_digits(wd);
    const auto [N, K] = em_params(wd);

    Real sum(prec);
    for (long n = 1; n < N; ++n) {
        Real nn(n, prec);
        sum += pow(nn, -s);
    }
    Real rn(N, prec);
    Real n_pow_ms = pow(rn, -s);                       // N^{-s}
    sum += n_pow_ms / Real(2L, prec);
    Real one(1L, prec);
    Real n_pow_1ms = pow(rn, one - s);                 // N^{1-s}
    sum += n_pow_1ms / (s - one);

    // correction terms B_{2k}/(2k)! P_k(s) N^{-s-2k+1}, P_k(s)=s(s+1)...(s+2k-2)
    BernoulliSequence bern;
    Real p(1L, prec);
    long jnext = 0;
    Real npow = n_pow_1ms;  // becomes N^{-s-2k+1} after division by N^{2k}
    Real n2(static_cast<long>(N), prec);
    n2 *= n2;
    Real target("1e-" + std::to_string(wd + 5), prec);
    Rat fact2k = rat(1);
    for (long k = 1; k <= K; ++k) {
        while (jnext <= 2 * k - 2) {
            p *= s + Real(jnext, prec);
            ++jnext;
        }
        npow /= n2;
        fact2k *= rat((2 * k - 1) * 2 * k);
        Rat c = bern.at(2 * k) / fact2k;
        Real term = Real(c, prec) * p * npow;
        sum += term;
        if (abs(term) < target) break;
    }
    return sum;
}

Real zeta_deriv(const Real& s, long digits) {
    const long wd = guarded(digits);
    const mpfr_prec_t prec = bits_for_digits(wd);
    const auto [N, K] = em_params(wd);

    Real sum(prec);
    for (long n = 2; n < N; ++n) {
        Real nn(n, prec);
        sum -= log(nn) * pow(nn, -s);
    }
    Real rn(N, prec);
    Real ln_n = log(rn);
    Real one(1L, prec);
    Real n_pow_ms = pow(rn, -s);
    Real n_pow_1ms = pow(rn, one - s);
    // d/ds [N^{-s}/2]
    sum -= ln_n * n_pow_ms / Real(2L, prec);
    // d/ds [N^{1-s}/(s-1)]
    Real sm1 = s - one;
    sum -= ln_n * n_pow_1ms / sm1;
    sum -= n_pow_1ms / (sm1 * sm1);

    // d/ds of the Bernoulli corrections: B_{2k}/(2k)! (P' - P ln N) N^{-s-2k+1}
    BernoulliSequence bern;
    Real p(1L, prec), dp(prec);
    long jnext = 0;
    Real npow = n_pow_1ms;
    Real n2(static_cast<long>(N), prec);
    n2 *= n2;
    Real target("1e-" + std::to_string(wd + 5), prec);
    Rat fact2k = rat(1);
    for (long k = 1; k <= K; ++k) {
        while (jnext <= 2 * k - 2) {
            Real f = s + Real(jnext, prec);
            // (P (s+j))' = P'(s+j) + P, tracked without divisions so zero
            // factors at negative integer s stay exact
            dp = dp * f + p;
            p *= f;
            ++jnext;
        }
        npow /= n2;
        fact2k *= rat((2 * k - 1) * 2 * k);
        Rat c = bern.at(2 * k) / fact2k;
        Real term = Real(c, prec) * (dp - p * ln_n) * npow;
        sum += term;
        if (abs(term) < target) break;
    }
    return sum;
}

Real euler_gamma(long digits) {
    return const_euler(bits_for_digits(guarded(digits)));
}

Real zeta_deriv_neg(long m, long digits) {
    if (m < 1 || m % 2 == 0)
        throw std::domain_error("zeta_deriv_neg requires odd m >= 1");
    const long wd = guarded(digits);
    const mpfr_prec_t prec = bits_for_digits(wd);

    Real s1(static_cast<long>(m + 1), prec);  // the reflected argument 1 - s = m + 1
    Real z = zeta(s1, wd);
    Real zd = zeta_deriv(s1, wd);

    // log-derivative at s = -m: log 2 + log pi - psi(1+m) - zeta'(1+m)/zeta(1+m)
    // (the cotangent term vanishes for odd m)
    Real bracket = const_log2(prec) + log(const_pi(prec));
    Real psi = Real(harmonic(m), prec) - const_euler(prec);
    bracket -= psi;
    bracket -= zd / z;

    return Real(zeta_neg(m), prec) * bracket;
}

namespace {

std::mutex cache_mutex;
std::map<std::tuple<int, long, long>, Real> symbol_cache;

}  // namespace

Real symbol_value(const TranscendentalSymbol& s, long digits) {
    auto key = std::make_tuple(static_cast<int>(s.kind()), s.arg(), digits);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = symbol_cache.find(key);
        if (it != symbol_cache.end()) return it->second;
    }
    const mpfr_prec_t prec = bits_for_digits(guarded(digits));
    Real value(prec);
    switch (s.kind()) {
        case TranscendentalSymbol::Kind::LogPi:
            value = log(const_pi(prec));
            break;
        case TranscendentalSymbol::Kind::LogPrime:
            value = log(Real(s.arg(), prec));
            break;
        case TranscendentalSymbol::Kind::ZetaPrime:
            value = zeta_deriv_neg(s.arg(), digits);
            break;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, ok] = symbol_cache.try_emplace(key, value);
    return it->second;
}

Real eval_constant(const Constant& c, long digits) {
    const mpfr_prec_t prec = bits_for_digits(guarded(digits));
    Real sum(Real(c.rational_part(), prec));
    for (const auto& [sym, coeff] : c.symbolic_part())
        sum += Real(coeff, prec) * symbol_value(sym, digits);
    return sum;
}

}  // namespace arrc::num
