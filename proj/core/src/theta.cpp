#include <arrc/theta.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arrc::theta {

int ThetaCharacteristic::parity() const {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s % 2;
}

std::string ThetaCharacteristic::to_string() const {
    auto half = [](int v) { return v ? std::string("1/2") : std::string("0"); };
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + half(a[i]);
    out += ";";
    for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + half(b[i]);
    return out + ")";
}

std::vector<ThetaCharacteristic> enumerate_characteristics(long g, Parity filter) {
    if (g < 1) throw std::domain_error("genus must be >= 1");
    std::vector<ThetaCharacteristic> out;
    const long top = 1L << g;
    for (long ai = 0; ai < top; ++ai) {
        for (long bi = 0; bi < top; ++bi) {
            ThetaCharacteristic ch;
            ch.a.resize(g);
            ch.b.resize(g);
            for (long j = 0; j < g; ++j) {
                ch.a[j] = static_cast<int>((ai >> j) & 1);
                ch.b[j] = static_cast<int>((bi >> j) & 1);
            }
            if (filter == Parity::all || (filter == Parity::even) == ch.is_even())
                out.push_back(std::move(ch));
        }
    }
    return out;
}

namespace {

// LDL^T pivots of (Y - shift I) for a symmetric Real matrix; returns the
// number of negative pivots, i.e. the count of eigenvalues below the shift.
long eigenvalues_below(const std::vector<Real>& y, long g, const Real& shift) {
    std::vector<Real> m(y);
    for (long i = 0; i < g; ++i) m[i * g + i] -= shift;
    long negatives = 0;
    for (long k = 0; k < g; ++k) {
        Real pivot = m[k * g + k];
        if (pivot.is_zero()) return -1;  // shift sits on an eigenvalue; caller retries
        if (pivot.sign() < 0) ++negatives;
        for (long i = k + 1; i < g; ++i) {
            Real f = m[i * g + k] / pivot;
            for (long j = k; j < g; ++j) m[i * g + j] -= f * m[k * g + j];
        }
    }
    return negatives;
}

Real lambda_min_lower_bound(const std::vector<Real>& y, long g, mpfr_prec_t prec) {
    // Gershgorin upper end for the bisection bracket
    Real hi(prec);
    for (long i = 0; i < g; ++i) {
        Real row(prec);
        for (long j = 0; j < g; ++j) row += abs(y[i * g + j]);
        if (row > hi) hi = row;
    }
    Real lo(prec);  // zero
    if (eigenvalues_below(y, g, lo) != 0)
        throw std::invalid_argument("imaginary part is not positive definite");
    Real two(2L, prec);
    Real nudge = hi / Real(1000000L, prec);
    for (int iter = 0; iter < 120; ++iter) {
        Real mid = (lo + hi) / two;
        long below = eigenvalues_below(y, g, mid);
        if (below < 0) {
            mid -= nudge;
            below = eigenvalues_below(y, g, mid);
            if (below < 0) break;
        }
        if (below == 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Real det_sym_positive(const std::vector<Real>& y, long g, mpfr_prec_t prec) {
    std::vector<Real> m(y);
    Real det(1L, prec);
    for (long k = 0; k < g; ++k) {
        Real pivot = m[k * g + k];
        if (pivot.sign() <= 0)
            throw std::invalid_argument("matrix is not positive definite");
        det *= pivot;
        for (long i = k + 1; i < g; ++i) {
            Real f = m[i * g + k] / pivot;
            for (long j = k; j < g; ++j) m[i * g + j] -= f * m[k * g + j];
        }
    }
    return det;
}

std::vector<Real> imaginary_part(const SiegelPoint& sp) {
    const long g = sp.genus();
    std::vector<Real> y;
    y.reserve(g * g);
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j) y.push_back(sp.at(i, j).im);
    return y;
}

}  // namespace

SiegelPoint::SiegelPoint(long g, std::vector<Complex> omega_row_major, long digits)
    : g_(g), digits_(digits), omega_(std::move(omega_row_major)),
      lambda_min_(bits_for_digits(digits < 10 ? 10 : digits)) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (digits_ < 10) throw std::invalid_argument("precision must be at least 10 digits");
    if (omega_.size() != static_cast<size_t>(g * g))
        throw std::invalid_argument("omega must have g*g entries");
    const mpfr_prec_t prec = bits_for_digits(digits_);

    // symmetry to working precision
    Real scale(1L, prec);
    for (const auto& z : omega_) {
        Real m = abs(z);
        if (m > scale) scale = m;
    }
    Real tol = scale * Real("1e-" + std::to_string(digits_ - 2), prec);
    for (long i = 0; i < g_; ++i)
        for (long j = i + 1; j < g_; ++j) {
            Real dr = abs(at(i, j).re - at(j, i).re);
            Real di = abs(at(i, j).im - at(j, i).im);
            if (dr > tol || di > tol)
                throw std::invalid_argument("omega is not symmetric to working precision");
        }

    std::vector<Real> y;
    y.reserve(g_ * g_);
    for (long i = 0; i < g_; ++i)
        for (long j = 0; j < g_; ++j) y.push_back(at(i, j).im);
    lambda_min_ = lambda_min_lower_bound(y, g_, prec);
    if (!(lambda_min_.sign() > 0))
        throw std::invalid_argument("imaginary part is not positive definite");
}

namespace {

// Upper estimate of the lattice tail beyond radius R, computed in doubles
// on the log scale. The shell at sup-norm M contributes at most
// ((2M+1)^g - (2M-1)^g) exp(-pi lambda (M - 1/2)^2).
double tail_log10(long R, long g, double lambda) {
    double total = 0.0;
    const double l10 = std::log(10.0);
    for (long M = R + 1; M <= R + 200; ++M) {
        double cnt = std::pow(2.0 * M + 1.0, g) - std::pow(2.0 * M - 1.0, g);
        double lg = std::log(cnt) / l10 -
                    (M_PI * lambda * (M - 0.5) * (M - 0.5)) / l10;
        total += std::pow(10.0, std::max(lg, -400.0));
        if (lg < -380.0) break;
    }
    return total > 0 ? std::log10(total) : -400.0;
}

long choose_radius(long g, double lambda, long digits) {
    const double target = -(static_cast<double>(digits) + 4);
    long r = 1;
    double start = std::sqrt(std::max(1.0, (digits + 6) * std::log(10.0)) /
                             (M_PI * std::max(lambda, 1e-12)));
    r = std::max<long>(1, static_cast<long>(start) - 2);
    while (tail_log10(r, g, lambda) > target) {
        ++r;
        if (r > 100000) throw std::runtime_error("theta truncation radius out of range");
    }
    return r;
}

}  // namespace

ThetaValue theta_constant(const ThetaCharacteristic& ch, const SiegelPoint& omega,
                          long radius_override) {
    const long g = omega.genus();
    if (ch.genus() != g)
        throw std::invalid_argument("characteristic and omega have different genus");
    const long digits = omega.digits();
    const mpfr_prec_t prec = bits_for_digits(digits);

    double lambda = omega.min_im_eigenvalue().to_double();
    long radius = choose_radius(g, lambda, digits);
    if (radius_override > radius) radius = radius_override;

    Real tail_bound("1e-" + std::to_string(digits + 3), prec);
    {
        double tl = tail_log10(radius, g, lambda);
        if (tl > -(digits + 3.0)) tail_bound = Real(std::pow(10.0, tl), prec);
    }

    const Real pi = const_pi(prec);
    const Real half(rat(1, 2), prec);
    const Real two_pi = pi * Real(2L, prec);

    Complex sum(prec);
    std::vector<long> n(g, -radius);
    std::vector<Real> v(g, Real(prec));
    for (;;) {
        // v = n + a/2, exact in binary
        for (long i = 0; i < g; ++i) {
            v[i] = Real(n[i], prec);
            if (ch.a[i]) v[i] += half;
        }
        // q = v^T Omega v, phase = 2 pi v^T (b/2)
        Complex q(prec);
        for (long i = 0; i < g; ++i) {
            Complex row(prec);
            for (long j = 0; j < g; ++j) {
                Complex t = omega.at(i, j);
                t.re *= v[j];
                t.im *= v[j];
                row += t;
            }
            row.re *= v[i];
            row.im *= v[i];
            q += row;
        }
        Real phase(prec);
        for (long i = 0; i < g; ++i)
            if (ch.b[i]) phase += v[i];
        phase *= pi;  // 2 pi * v^T b with b entries 1/2

        // exp(i pi q + i phase) = exp(-pi Im q) * e^{i (pi Re q + phase)}
        Complex expo(prec);
        expo.re = -(pi * q.im);
        expo.im = pi * q.re + phase;
        sum += cexp(expo);

        long i = 0;
        while (i < g && n[i] == radius) {
            n[i] = -radius;
            ++i;
        }
        if (i == g) break;
        ++n[i];
    }
    return {sum, tail_bound, radius};
}

Complex chi(const SiegelPoint& omega) {
    const mpfr_prec_t prec = bits_for_digits(omega.digits());
    Complex prod(prec);
    prod.re = Real(1L, prec);
    for (const auto& ch : enumerate_characteristics(omega.genus(), Parity::even))
        prod = prod * theta_constant(ch, omega).value;
    return prod;
}

Real petersson_norm_chi(const SiegelPoint& omega) {
    const long g = omega.genus();
    const mpfr_prec_t prec = bits_for_digits(omega.digits());
    Real det = det_sym_positive(imaginary_part(omega), g, prec);
    // weight/2 = (2^{2g-2} + 2^{g-2})/2 = N_even/4, a rational exponent
    Rat expo = (pow_rat(rat(2), 2 * g - 2) + pow_rat(rat(2), g - 2)) / rat(2);
    Real power = exp(Real(expo, prec) * log(det));
    return power * abs(chi(omega));
}

bool is_symplectic(const std::vector<long>& gamma, long g) {
    const long n = 2 * g;
    if (gamma.size() != static_cast<size_t>(n * n)) return false;
    // J = [[0, I], [-I, 0]]; check gamma^T J gamma = J exactly
    auto J = [&](long i, long j) -> long {
        if (i < g && j >= g && j - g == i) return 1;
        if (i >= g && j < g && i - g == j) return -1;
        return 0;
    };
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            long long acc = 0;
            for (long k = 0; k < n; ++k)
                for (long l = 0; l < n; ++l)
                    acc += static_cast<long long>(gamma[k * n + i]) * J(k, l) * gamma[l * n + j];
            if (acc != J(i, j)) return false;
        }
    }
    return true;
}

SiegelPoint sp_transform(const SiegelPoint& omega, const std::vector<long>& gamma) {
    const long g = omega.genus();
    if (!is_symplectic(gamma, g))
        throw std::invalid_argument("matrix is not symplectic");
    const long n = 2 * g;
    const mpfr_prec_t prec = bits_for_digits(omega.digits());

    auto block = [&](long bi, long bj, long i, long j) {
        return gamma[(bi * g + i) * n + (bj * g + j)];
    };

    // M = C Omega + D, T = A Omega + B
    std::vector<Complex> m(g * g, Complex(prec)), t(g * g, Complex(prec));
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j) {
            Complex mc(prec), tc(prec);
            for (long k = 0; k < g; ++k) {
                Complex o = omega.at(k, j);
                long c_ik = block(1, 0, i, k);
                long a_ik = block(0, 0, i, k);
                if (c_ik) {
                    Complex s = o;
                    s.re *= Real(c_ik, prec);
                    s.im *= Real(c_ik, prec);
                    mc += s;
                }
                if (a_ik) {
                    Complex s = o;
                    s.re *= Real(a_ik, prec);
                    s.im *= Real(a_ik, prec);
                    tc += s;
                }
            }
            mc.re += Real(block(1, 1, i, j), prec);
            tc.re += Real(block(0, 1, i, j), prec);
            m[i * g + j] = mc;
            t[i * g + j] = tc;
        }

    // invert M by Gauss-Jordan with partial pivoting
    std::vector<Complex> inv(g * g, Complex(prec));
    for (long i = 0; i < g; ++i) inv[i * g + i].re = Real(1L, prec);
    Real tiny("1e-" + std::to_string(omega.digits() + 5), prec);
    for (long col = 0; col < g; ++col) {
        long piv = col;
        Real best = abs(m[col * g + col]);
        for (long r = col + 1; r < g; ++r) {
            Real cand = abs(m[r * g + col]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (!(best > tiny))
            throw std::invalid_argument("C Omega + D is singular at working precision");
        if (piv != col)
            for (long j = 0; j < g; ++j) {
                std::swap(m[col * g + j], m[piv * g + j]);
                std::swap(inv[col * g + j], inv[piv * g + j]);
            }
        Complex p = m[col * g + col];
        for (long j = 0; j < g; ++j) {
            m[col * g + j] = m[col * g + j] / p;
            inv[col * g + j] = inv[col * g + j] / p;
        }
        for (long r = 0; r < g; ++r) {
            if (r == col) continue;
            Complex f = m[r * g + col];
            if (f.re.is_zero() && f.im.is_zero()) continue;
            for (long j = 0; j < g; ++j) {
                m[r * g + j] -= f * m[col * g + j];
                inv[r * g + j] -= f * inv[col * g + j];
            }
        }
    }

    // result = T * M^{-1}, then symmetrize
    std::vector<Complex> res(g * g, Complex(prec));
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j) {
            Complex acc(prec);
            for (long k = 0; k < g; ++k) acc += t[i * g + k] * inv[k * g + j];
            res[i * g + j] = acc;
        }
    Real half(rat(1, 2), prec);
    for (long i = 0; i < g; ++i)
        for (long j = i + 1; j < g; ++j) {
            Complex avg = res[i * g + j] + res[j * g + i];
            avg.re *= half;
            avg.im *= half;
            res[i * g + j] = avg;
            res[j * g + i] = avg;
        }
    return SiegelPoint(g, std::move(res), omega.digits());
}

std::uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform_sym() { return 2.0 * uniform() - 1.0; }

long Rng::below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

SiegelPoint random_siegel_point(long g, long digits, Rng& rng) {
    const mpfr_prec_t prec = bits_for_digits(digits);
    std::vector<double> b(g * g, 0.0), m(g * g, 0.0);
    for (long i = 0; i < g; ++i)
        for (long j = i; j < g; ++j) {
            double v = rng.uniform_sym();
            b[i * g + j] = v;
            b[j * g + i] = v;
        }
    for (long i = 0; i < g * g; ++i) m[i] = rng.uniform_sym();
    std::vector<Complex> omega(g * g, Complex(prec));
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j) {
            double q = (i == j) ? 0.5 : 0.0;  // M^T M + I/2
            for (long k = 0; k < g; ++k) q += m[k * g + i] * m[k * g + j];
            omega[i * g + j] = Complex(Real(b[i * g + j], prec), Real(q, prec));
        }
    return SiegelPoint(g, std::move(omega), digits);
}

namespace {

std::vector<long> mat_identity(long n) {
    std::vector<long> m(n * n, 0);
    for (long i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

std::vector<long> mat_mul(const std::vector<long>& a, const std::vector<long>& b, long n) {
    std::vector<long> c(n * n, 0);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            long v = a[i * n + k];
            if (!v) continue;
            for (long j = 0; j < n; ++j) c[i * n + j] += v * b[k * n + j];
        }
    return c;
}

}  // namespace

std::vector<long> random_symplectic(long g, Rng& rng) {
    const long n = 2 * g;
    auto inversion = [&]() {
        std::vector<long> m(n * n, 0);
        for (long i = 0; i < g; ++i) {
            m[i * n + (g + i)] = 1;
            m[(g + i) * n + i] = -1;
        }
        return m;
    };
    auto translation = [&]() {
        std::vector<long> m = mat_identity(n);
        for (long i = 0; i < g; ++i)
            for (long j = i; j < g; ++j) {
                long v = rng.below(5) - 2;
                m[i * n + (g + j)] = v;
                m[j * n + (g + i)] = v;
            }
        return m;
    };
    auto gl_embed = [&]() {
        // U from a couple of integer shears; [[U,0],[0,U^{-T}]]
        std::vector<long> u = mat_identity(g), uinv = mat_identity(g);
        long shears = 1 + rng.below(2);
        for (long s = 0; s < shears && g > 1; ++s) {
            long i = rng.below(g), j = rng.below(g);
            if (i == j) continue;
            long k = rng.below(3) - 1;
            if (!k) continue;
            std::vector<long> e = mat_identity(g), einv = mat_identity(g);
            e[i * g + j] = k;
            einv[i * g + j] = -k;
            u = mat_mul(u, e, g);
            uinv = mat_mul(einv, uinv, g);
        }
        std::vector<long> m(n * n, 0);
        for (long i = 0; i < g; ++i)
            for (long j = 0; j < g; ++j) {
                m[i * n + j] = u[i * g + j];
                m[(g + i) * n + (g + j)] = uinv[j * g + i];  // U^{-T}
            }
        return m;
    };

    std::vector<long> result;
    switch (rng.below(4)) {
        case 0: result = inversion(); break;
        case 1: result = translation(); break;
        case 2: result = gl_embed(); break;
        default: result = mat_mul(translation(), inversion(), n); break;
    }
    if (!is_symplectic(result, g))
        throw std::logic_error("sampled matrix failed the symplectic check");
    return result;
}

}  // namespace arrc::theta
