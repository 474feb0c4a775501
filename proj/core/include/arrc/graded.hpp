#pragma once

#include <arrc/constants.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace arrc::graded {

// Degree-1 first-Chern-class generators, tagged by where they live relative
// to the fibration being integrated. Degree 0 is reserved for the one formal
// multiplicity symbol (G) that fiber integration produces.
enum class Locus { fiber, base };

struct Generator {
    std::string name;
    Locus locus = Locus::base;
    int degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Exponent vector indexed like Ring::generators().
using Monomial = std::vector<int>;

// Truncated polynomial context: commuting generators, products above the
// truncation degree discarded.
class Ring {
public:
    static RingPtr make(std::vector<Generator> gens, int truncation);

    const std::vector<Generator>& generators() const { return gens_; }
    int truncation() const { return truncation_; }
    int index_of(const std::string& name) const;  // -1 when absent
    int require(const std::string& name) const;   // throws when absent

    int weighted_degree(const Monomial& m) const;
    std::string monomial_string(const Monomial& m) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.truncation_ == b.truncation_ && a.gens_ == b.gens_;
    }

private:
    Ring(std::vector<Generator> gens, int truncation);
    std::vector<Generator> gens_;
    int truncation_;
};

class GradedElement {
public:
    explicit GradedElement(RingPtr ring);

    static GradedElement zero(RingPtr ring) { return GradedElement(std::move(ring)); }
    static GradedElement scalar(RingPtr ring, Constant c);
    static GradedElement generator(RingPtr ring, const std::string& name);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Constant>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Constant coefficient(const Monomial& m) const;
    Constant constant_term() const;

    GradedElement& operator+=(const GradedElement& rhs);
    GradedElement& operator-=(const GradedElement& rhs);
    GradedElement& scale(const Constant& c);

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    GradedElement operator-() const;

    friend bool operator==(const GradedElement& a, const GradedElement& b);

    std::string to_string() const;

    // internal: inserts c * m, dropping zero coefficients and monomials above
    // the truncation degree
    void add_term(const Monomial& m, const Constant& c);

private:
    RingPtr ring_;
    std::map<Monomial, Constant> terms_;
};

// Truncated commutative product. Contexts must agree.
GradedElement gr_mul(const GradedElement& a, const GradedElement& b);
GradedElement operator*(const GradedElement& a, const GradedElement& b);

// Homogeneous degree-k component, 0 <= k <= truncation.
GradedElement degree_part(const GradedElement& a, int k);

// Component of degree <= k.
GradedElement degree_upto(const GradedElement& a, int k);

GradedElement pow(const GradedElement& a, int e);

// Multiplicative inverse of a unit (nonzero rational degree-0 part).
GradedElement invert_unit(const GradedElement& a);

// Ring morphism: every source generator must be mapped to an element of the
// target ring; coefficients pass through unchanged.
GradedElement apply_hom(const GradedElement& a, const RingPtr& target,
                        const std::map<std::string, GradedElement>& images);

// Substitution of one generator inside its own ring.
GradedElement substitute(const GradedElement& a, const std::string& name,
                         const GradedElement& image);

// Registered fiber-integration rule set: each fiber-part monomial that can
// occur must be listed with its image in the target ring; base generators
// pass through by name (projection formula). Unlisted fiber parts are
// rejected loudly rather than guessed.
struct PushforwardTable {
    RingPtr target;
    std::map<Monomial, GradedElement> images;  // keyed by fiber exponents only
};

GradedElement pushforward(const GradedElement& a, const PushforwardTable& table);

// The arithmetic pushforward for the projective bundle P^{g-1}: the fiber
// power x^{g-1} maps to 1, x^g maps to [sum_{l<g} H_l] + c1 of the base
// tangent determinant, lower powers vanish, higher powers are outside the
// rule set. The harmonic constant lands on the analytic line, a degree-1
// generator named by `analytic_name`, so that later truncation treats it as
// the degree-1 class it is.
PushforwardTable projective_pushforward_table(const RingPtr& source, long g,
                                              const std::string& base_tangent_name,
                                              const std::string& analytic_name,
                                              int target_truncation);

GradedElement pushforward_projective(const GradedElement& a, long g);

}  // namespace arrc::graded
