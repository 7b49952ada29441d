#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmlef/monomial.hpp"
#include "cmlef/scalar.hpp"

namespace cmlef {

/// Sparse element of the exterior algebra: monomial -> nonzero coefficient.
/// Values are immutable in spirit; every operation returns a fresh element,
/// and stored coefficients are never zero.
class Element {
public:
    Element() = default;
    static Element zero() { return {}; }
    static Element unit() { return term(Monomial{}, 1); }
    static Element term(Monomial m, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const Monomial& m) const;

    /// Accumulates c on m, erasing the entry when the sum cancels.
    Element& add_term(const Monomial& m, const Scalar& c);

    /// Terms of degree exactly i (no range check; see degree_component).
    Element filter_degree(unsigned i) const;

    /// Degree of a homogeneous element; nullopt when degrees mix. The zero
    /// element is homogeneous of every degree and reports nullopt.
    std::optional<unsigned> homogeneous_degree() const;
    bool is_homogeneous(unsigned i) const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& c);

    friend Element operator+(Element a, const Element& b) {
        a += b;
        return a;
    }
    friend Element operator-(Element a, const Element& b) {
        a -= b;
        return a;
    }
    friend Element operator*(Element a, const Scalar& c) {
        a *= c;
        return a;
    }
    friend Element operator*(const Scalar& c, Element a) {
        a *= c;
        return a;
    }

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::map<Monomial, Scalar> terms_;
};

/// Bilinear associative product with the merge-sign convention of
/// wedge_sign; zero on repeated generators.
Element wedge(const Element& a, const Element& b);

/// Projection onto degree i; throws when i > 2g.
Element degree_component(const Element& a, unsigned i, const GeneratorLayout& layout);

/// Coefficient of the full canonical monomial w_1 ... w_2g (the model of the
/// trace H^{2g} ~ coefficients).
Scalar top_trace(const Element& a, const GeneratorLayout& layout);

/// True iff a pairs to zero against every monomial of complementary degree.
/// Requires a homogeneous of degree i (throws otherwise).
bool numerically_trivial(const Element& a, unsigned i, const GeneratorLayout& layout);

/// All degree-d basis monomials in increasing canonical (bit) order.
std::vector<Monomial> degree_basis(const GeneratorLayout& layout, unsigned d);

/// Human-readable sum "c*m + ..." in canonical term order; "0" when empty.
std::string render(const Element& a, const GeneratorLayout& layout);

}  // namespace cmlef
