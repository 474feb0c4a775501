#include <arrc/graded.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace arrc::graded {

Ring::Ring(std::vector<Generator> gens, int truncation)
    : gens_(std::move(gens)), truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation degree");
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.degree != 0 && g.degree != 1)
            throw std::invalid_argument("generator degree must be 0 or 1");
        if (!names.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name: " + g.name);
    }
}

RingPtr Ring::make(std::vector<Generator> gens, int truncation) {
    return RingPtr(new Ring(std::move(gens), truncation));
}

int Ring::index_of(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Ring::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw std::invalid_argument("no generator named '" + name + "' in this ring");
    return i;
}

int Ring::weighted_degree(const Monomial& m) const {
    int d = 0;
    for (size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

std::string Ring::monomial_string(const Monomial& m) const {
    // factors sorted by generator name for a canonical form
    std::vector<std::pair<std::string, int>> parts;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (m[i] > 0) parts.emplace_back(gens_[i].name, m[i]);
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& [name, e] : parts) {
        if (!out.empty()) out += "*";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

GradedElement::GradedElement(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
}

GradedElement GradedElement::scalar(RingPtr ring, Constant c) {
    GradedElement e(std::move(ring));
    e.add_term(Monomial(e.ring_->generators().size(), 0), c);
    return e;
}

GradedElement GradedElement::generator(RingPtr ring, const std::string& name) {
    GradedElement e(std::move(ring));
    int i = e.ring_->require(name);
    Monomial m(e.ring_->generators().size(), 0);
    m[i] = 1;
    e.add_term(m, Constant(1));
    return e;
}

void GradedElement::add_term(const Monomial& m, const Constant& c) {
    if (c.is_zero()) return;
    if (ring_->weighted_degree(m) > ring_->truncation()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Constant GradedElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Constant() : it->second;
}

Constant GradedElement::constant_term() const {
    return coefficient(Monomial(ring_->generators().size(), 0));
}

namespace {

void check_same_ring(const GradedElement& a, const GradedElement& b) {
    if (!(*a.ring() == *b.ring()))
        throw std::invalid_argument("graded elements from different ring contexts");
}

}  // namespace

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, Constant() - c);
    return *this;
}

GradedElement& GradedElement::scale(const Constant& c) {
    GradedElement out(ring_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    *this = std::move(out);
    return *this;
}

GradedElement GradedElement::operator-() const {
    GradedElement out(ring_);
    for (const auto& [m, c] : terms_) out.add_term(m, Constant() - c);
    return out;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
    return *a.ring() == *b.ring() && a.terms() == b.terms();
}

std::string GradedElement::to_string() const {
    if (terms_.empty()) return "0";
    // order terms by weighted degree, then by canonical monomial string
    std::vector<std::pair<std::pair<int, std::string>, const Constant*>> ordered;
    for (const auto& [m, c] : terms_)
        ordered.push_back({{ring_->weighted_degree(m), ring_->monomial_string(m)}, &c});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::string out;
    for (const auto& [key, cp] : ordered) {
        const std::string& mono = key.second;
        std::string cs = cp->to_string();
        if (mono.empty()) {
            if (out.empty()) {
                out = cs;
            } else if (cs[0] == '-') {
                out += " - " + cs.substr(1);
            } else {
                out += " + " + cs;
            }
            continue;
        }
        bool simple = cp->is_rational();
        std::string piece;
        if (simple) {
            Rat q = cp->rational_part();
            Rat a = abs(q);
            piece = (q < 0 ? "-" : "") + a.get_str() + "*" + mono;
        } else {
            piece = "(" + cs + ")*" + mono;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

GradedElement gr_mul(const GradedElement& a, const GradedElement& b) {
    check_same_ring(a, b);
    const auto& ring = a.ring();
    GradedElement out(ring);
    const size_t n = ring->generators().size();
    Monomial m(n, 0);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            if (ring->weighted_degree(m) > ring->truncation()) continue;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) { return gr_mul(a, b); }

GradedElement degree_part(const GradedElement& a, int k) {
    if (k < 0 || k > a.ring()->truncation())
        throw std::invalid_argument("degree_part index out of range");
    GradedElement out(a.ring());
    for (const auto& [m, c] : a.terms())
        if (a.ring()->weighted_degree(m) == k) out.add_term(m, c);
    return out;
}

GradedElement degree_upto(const GradedElement& a, int k) {
    if (k < 0 || k > a.ring()->truncation())
        throw std::invalid_argument("degree_upto index out of range");
    GradedElement out(a.ring());
    for (const auto& [m, c] : a.terms())
        if (a.ring()->weighted_degree(m) <= k) out.add_term(m, c);
    return out;
}

GradedElement pow(const GradedElement& a, int e) {
    if (e < 0) throw std::invalid_argument("negative power of a graded element");
    GradedElement out = GradedElement::scalar(a.ring(), Constant(1));
    for (int i = 0; i < e; ++i) out = gr_mul(out, a);
    return out;
}

GradedElement invert_unit(const GradedElement& a) {
    Constant c0 = a.constant_term();
    if (!c0.is_rational() || c0.rational_part() == 0)
        throw std::invalid_argument("invert_unit requires a nonzero rational degree-0 part");
    Rat c = c0.rational_part();
    // a = c(1 + u) with u nilpotent; a^{-1} = c^{-1} sum (-u)^k
    GradedElement u = a;
    u.scale(Constant(rat(Int(c.get_den()), Int(c.get_num()))));
    u -= GradedElement::scalar(a.ring(), Constant(1));
    GradedElement out = GradedElement::scalar(a.ring(), Constant(1));
    GradedElement upow = GradedElement::scalar(a.ring(), Constant(1));
    for (int k = 1; k <= a.ring()->truncation(); ++k) {
        upow = gr_mul(upow, u);
        if (upow.is_zero()) break;
        if (k % 2)
            out -= upow;
        else
            out += upow;
    }
    out.scale(Constant(rat(Int(c.get_den()), Int(c.get_num()))));
    return out;
}

GradedElement apply_hom(const GradedElement& a, const RingPtr& target,
                        const std::map<std::string, GradedElement>& images) {
    const auto& gens = a.ring()->generators();
    std::vector<const GradedElement*> img(gens.size(), nullptr);
    for (size_t i = 0; i < gens.size(); ++i) {
        auto it = images.find(gens[i].name);
        if (it == images.end())
            throw std::invalid_argument("apply_hom: no image for generator '" + gens[i].name + "'");
        if (!(*it->second.ring() == *target))
            throw std::invalid_argument("apply_hom: image not in target ring");
        img[i] = &it->second;
    }
    GradedElement out(target);
    for (const auto& [m, c] : a.terms()) {
        GradedElement term = GradedElement::scalar(target, c);
        for (size_t i = 0; i < gens.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term = gr_mul(term, *img[i]);
        out += term;
    }
    return out;
}

GradedElement substitute(const GradedElement& a, const std::string& name,
                         const GradedElement& image) {
    std::map<std::string, GradedElement> images;
    for (const auto& g : a.ring()->generators()) {
        if (g.name == name)
            images.emplace(g.name, image);
        else
            images.emplace(g.name, GradedElement::generator(a.ring(), g.name));
    }
    return apply_hom(a, a.ring(), images);
}

GradedElement pushforward(const GradedElement& a, const PushforwardTable& table) {
    const auto& src = a.ring();
    const auto& gens = src->generators();
    const auto& tgt = table.target;

    std::vector<size_t> fiber_idx, base_idx;
    for (size_t i = 0; i < gens.size(); ++i)
        (gens[i].locus == Locus::fiber ? fiber_idx : base_idx).push_back(i);

    GradedElement out(tgt);
    for (const auto& [m, c] : a.terms()) {
        Monomial fiber_part(fiber_idx.size(), 0);
        for (size_t j = 0; j < fiber_idx.size(); ++j) fiber_part[j] = m[fiber_idx[j]];
        auto it = table.images.find(fiber_part);
        if (it == table.images.end()) {
            std::string what = "pushforward: unregistered fiber monomial";
            for (size_t j = 0; j < fiber_idx.size(); ++j)
                if (fiber_part[j])
                    what += " " + gens[fiber_idx[j]].name + "^" + std::to_string(fiber_part[j]);
            throw std::invalid_argument(what);
        }
        // projection formula: base factors ride along, by name
        GradedElement term = it->second;
        term.scale(c);
        for (size_t i : base_idx)
            for (int e = 0; e < m[i]; ++e)
                term = gr_mul(term, GradedElement::generator(tgt, gens[i].name));
        out += term;
    }
    return out;
}

PushforwardTable projective_pushforward_table(const RingPtr& source, long g,
                                              const std::string& base_tangent_name,
                                              const std::string& analytic_name,
                                              int target_truncation) {
    if (g < 2) throw std::invalid_argument("projective pushforward requires g >= 2");
    size_t fiber_count = 0;
    for (const auto& gen : source->generators())
        if (gen.locus == Locus::fiber) ++fiber_count;
    if (fiber_count != 1)
        throw std::invalid_argument("projective pushforward expects exactly one fiber generator");

    std::vector<Generator> tgens;
    tgens.push_back({analytic_name, Locus::base, 1});
    for (const auto& gen : source->generators())
        if (gen.locus == Locus::base) tgens.push_back(gen);
    RingPtr target = Ring::make(std::move(tgens), target_truncation);

    PushforwardTable table{target, {}};
    for (long k = 0; k < g - 1; ++k)
        table.images.emplace(Monomial{static_cast<int>(k)}, GradedElement::zero(target));
    table.images.emplace(Monomial{static_cast<int>(g - 1)},
                         GradedElement::scalar(target, Constant(1)));
    // x^g |-> [sum_{l=1}^{g-1} H_l] + c1 of the base tangent determinant
    Rat hsum = 0;
    for (long l = 1; l <= g - 1; ++l) hsum += harmonic(l);
    GradedElement top = GradedElement::generator(target, base_tangent_name);
    GradedElement analytic = GradedElement::generator(target, analytic_name);
    analytic.scale(Constant(hsum));
    top += analytic;
    table.images.emplace(Monomial{static_cast<int>(g)}, std::move(top));
    return table;
}

GradedElement pushforward_projective(const GradedElement& a, long g) {
    const auto& gens = a.ring()->generators();
    std::string base_name;
    for (const auto& gen : gens)
        if (gen.locus == Locus::base) {
            if (!base_name.empty())
                throw std::invalid_argument(
                    "pushforward_projective: several base generators; register a table instead");
            base_name = gen.name;
        }
    if (base_name.empty())
        throw std::invalid_argument("pushforward_projective: ring has no base generator");
    auto table = projective_pushforward_table(a.ring(), g, base_name, "cst",
                                              a.ring()->truncation());
    return pushforward(a, table);
}

}  // namespace arrc::graded
