#include <arrc/constants.hpp>

#include <cctype>
#include <sstream>
#include <vector>

namespace arrc {

std::string TranscendentalSymbol::to_string() const {
    switch (kind_) {
        case Kind::LogPi: return "log(pi)";
        case Kind::LogPrime: return "log(" + std::to_string(arg_) + ")";
        case Kind::ZetaPrime: return "zp(" + std::to_string(arg_) + ")";
    }
    return "?";
}

Constant Constant::symbol(const TranscendentalSymbol& s, const Rat& coeff) {
    Constant c;
    if (coeff != 0) c.symbolic_[s] = coeff;
    return c;
}

Rat Constant::coeff(const TranscendentalSymbol& s) const {
    auto it = symbolic_.find(s);
    return it == symbolic_.end() ? Rat(0) : it->second;
}

void Constant::prune() {
    for (auto it = symbolic_.begin(); it != symbolic_.end();) {
        if (it->second == 0)
            it = symbolic_.erase(it);
        else
            ++it;
    }
}

Constant& Constant::operator+=(const Constant& rhs) {
    rational_ += rhs.rational_;
    for (const auto& [s, c] : rhs.symbolic_) symbolic_[s] += c;
    prune();
    return *this;
}

Constant& Constant::operator-=(const Constant& rhs) {
    rational_ -= rhs.rational_;
    for (const auto& [s, c] : rhs.symbolic_) symbolic_[s] -= c;
    prune();
    return *this;
}

Constant& Constant::scale(const Rat& r) {
    rational_ *= r;
    if (r == 0) {
        symbolic_.clear();
    } else {
        for (auto& [s, c] : symbolic_) c *= r;
    }
    return *this;
}

Constant& Constant::operator*=(const Constant& rhs) {
    if (!symbolic_.empty() && !rhs.symbolic_.empty()) throw symbolic_product_error();
    if (rhs.symbolic_.empty()) return scale(rhs.rational_);
    // this is purely rational: scale rhs by it
    Rat r = rational_;
    *this = rhs;
    return scale(r);
}

namespace {

std::string coeff_str(const Rat& c) { return c.get_str(); }

void append_term(std::string& out, const Rat& coeff, const std::string& body) {
    Rat a = abs(coeff);
    if (out.empty()) {
        out += (coeff < 0) ? "-" : "";
    } else {
        out += (coeff < 0) ? " - " : " + ";
    }
    out += coeff_str(a);
    if (!body.empty()) out += "*" + body;
}

}  // namespace

std::string Constant::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (rational_ != 0) append_term(out, rational_, "");
    for (const auto& [s, c] : symbolic_) append_term(out, c, s.to_string());
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("cannot parse constant near position " +
                                    std::to_string(pos) + ": " + what);
    }

    Rat parse_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected number");
        std::string num = text.substr(start, pos - start);
        std::string den = "1";
        if (accept('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("expected denominator");
            den = text.substr(dstart, pos - dstart);
        }
        return rat(Int(num), Int(den));
    }

    bool lookahead_word(const std::string& w) {
        skip_ws();
        return text.compare(pos, w.size(), w) == 0;
    }

    // "log(pi)" | "log(<positive rational>)" | "zp(<odd m>)"
    Constant parse_symbolic(const Rat& coeff) {
        if (lookahead_word("log(")) {
            pos += 4;
            skip_ws();
            if (lookahead_word("pi")) {
                pos += 2;
                if (!accept(')')) fail("expected ')'");
                return Constant::symbol(TranscendentalSymbol::log_pi(), coeff);
            }
            Rat q = parse_rational();
            if (!accept(')')) fail("expected ')'");
            Constant c = log_rational(q);
            return c.scale(coeff);
        }
        if (lookahead_word("zp(")) {
            pos += 3;
            Rat m = parse_rational();
            if (!accept(')')) fail("expected ')'");
            if (m.get_den() != 1) fail("zp argument must be an integer");
            return Constant::symbol(TranscendentalSymbol::zeta_prime(m.get_num().get_si()), coeff);
        }
        fail("expected symbol");
    }

    Constant parse_term(bool negative) {
        Rat sign = negative ? rat(-1) : rat(1);
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rat c = parse_rational() * sign;
            if (accept('*')) return parse_symbolic(c);
            return Constant(c);
        }
        return parse_symbolic(sign);
    }

    Constant parse_expr() {
        Constant total;
        bool neg = accept('-');
        if (!neg) accept('+');
        total += parse_term(neg);
        while (!eof()) {
            if (accept('+'))
                total += parse_term(false);
            else if (accept('-'))
                total += parse_term(true);
            else
                fail("expected '+' or '-'");
        }
        return total;
    }
};

}  // namespace

Constant Constant::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("cannot parse constant: empty input");
    return p.parse_expr();
}

Rat harmonic(long n) {
    if (n < 0) throw std::domain_error("harmonic number of negative index");
    Rat h = 0;
    for (long k = 1; k <= n; ++k) h += rat(1, k);
    return h;
}

Rat bernoulli(long n) {
    if (n < 0) throw std::domain_error("Bernoulli number of negative index");
    // recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0
    std::vector<Rat> b;
    b.push_back(rat(1));
    if (n >= 1) b.push_back(rat(-1, 2));
    for (long m = 2; m <= n; ++m) {
        Rat s = 0;
        for (long k = 0; k < m; ++k) s += rat(binomial(m + 1, k), Int(1)) * b[k];
        b.push_back(-s / rat(m + 1));
    }
    return b[n];
}

Rat zeta_neg(long m) {
    if (m < 1) throw std::domain_error("zeta_neg requires m >= 1");
    return -bernoulli(m + 1) / rat(m + 1);
}

namespace {

void accumulate_prime_logs(Constant& out, Int n, int sign) {
    if (n < 1) throw std::domain_error("log of nonpositive integer");
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out += Constant::symbol(TranscendentalSymbol::log_prime(p.get_si()),
                                    rat(sign * e));
    }
    if (n > 1)
        out += Constant::symbol(TranscendentalSymbol::log_prime(n.get_si()), rat(sign));
}

}  // namespace

Constant log_rational(const Rat& q) {
    if (q <= 0) throw std::domain_error("log_rational requires a positive argument");
    Constant out;
    accumulate_prime_logs(out, Int(q.get_num()), +1);
    accumulate_prime_logs(out, Int(q.get_den()), -1);
    return out;
}

Constant lambda_parity_constant(long g) {
    if (g < 2) throw std::domain_error("lambda_parity_constant requires g >= 2");
    // numerator g(g-2)... descends to 2 for even g, to 1 for odd g;
    // denominator (g-1)(g-3)... descends to 1 for even g, to 2 for odd g
    Int num = 1, den = 1;
    for (long v = g; v >= 1; v -= 2) num *= v;
    for (long v = g - 1; v >= 1; v -= 2) den *= v;
    return log_rational(rat(num, den));
}

}  // namespace arrc
