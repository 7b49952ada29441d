#include "cmlef/element.hpp"

#include <bit>
#include <stdexcept>

namespace cmlef {

Element Element::term(Monomial m, Scalar c) {
    Element e;
    if (!c.is_zero())
        e.terms_.emplace(m, std::move(c));
    return e;
}

Scalar Element::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar{} : it->second;
}

Element& Element::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return *this;
    const auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

Element Element::filter_degree(unsigned i) const {
    Element out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == i)
            out.terms_.emplace(m, c);
    return out;
}

std::optional<unsigned> Element::homogeneous_degree() const {
    std::optional<unsigned> deg;
    for (const auto& [m, c] : terms_) {
        if (!deg)
            deg = m.degree();
        else if (*deg != m.degree())
            return std::nullopt;
    }
    return deg;
}

bool Element::is_homogeneous(unsigned i) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != i)
            return false;
    return true;
}

Element Element::operator-() const {
    Element out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Element& Element::operator+=(const Element& o) {
    if (this == &o) {
        for (auto& [m, c] : terms_)
            c *= Scalar(2);
        return *this;
    }
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Element wedge(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const int sign = wedge_sign(ma, mb);
            if (sign == 0)
                continue;
            Scalar c = ca * cb;
            if (sign < 0)
                c = -c;
            out.add_term(merge_disjoint(ma, mb), c);
        }
    }
    return out;
}

Element degree_component(const Element& a, unsigned i, const GeneratorLayout& layout) {
    if (i > layout.generator_count())
        throw std::invalid_argument("degree_component: degree out of range");
    return a.filter_degree(i);
}

Scalar top_trace(const Element& a, const GeneratorLayout& layout) {
    return a.coefficient(Monomial(layout.full_mask()));
}

bool numerically_trivial(const Element& a, unsigned i, const GeneratorLayout& layout) {
    const unsigned n = layout.generator_count();
    if (i > n)
        throw std::invalid_argument("numerically_trivial: degree out of range");
    if (!a.is_homogeneous(i))
        throw std::invalid_argument("numerically_trivial: element not homogeneous of given degree");
    for (const Monomial& b : degree_basis(layout, n - i))
        if (!top_trace(wedge(a, Element::term(b, 1)), layout).is_zero())
            return false;
    return true;
}

std::vector<Monomial> degree_basis(const GeneratorLayout& layout, unsigned d) {
    const unsigned n = layout.generator_count();
    if (d > n)
        throw std::invalid_argument("degree_basis: degree out of range");
    std::vector<Monomial> out;
    if (d == 0) {
        out.emplace_back();
        return out;
    }
    const std::uint64_t lowest = (d >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    const std::uint64_t highest = lowest << (n - d);
    std::uint64_t v = lowest;
    while (true) {
        out.push_back(Monomial(v));
        if (v == highest)
            break;
        // Gosper's hack: next subset of the same cardinality.
        const std::uint64_t t = v | (v - 1);
        v = (t + 1) | ((((~t & (t + 1)) - 1) >> std::countr_zero(v)) >> 1);
    }
    return out;
}

std::string render(const Element& a, const GeneratorLayout& layout) {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        if (!out.empty())
            out += " + ";
        if (m.empty()) {
            out += c.str();
        } else if (c == Scalar(1)) {
            out += render(m, layout);
        } else if (c == Scalar(-1)) {
            out += "-" + render(m, layout);
        } else {
            out += c.str() + "*" + render(m, layout);
        }
    }
    return out;
}

}  // namespace cmlef
