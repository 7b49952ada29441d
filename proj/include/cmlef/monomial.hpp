#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cmlef/generators.hpp"

namespace cmlef {

/// Square-free exterior monomial, stored as a bit set over generator ranks.
/// The empty monomial is the unit of degree 0; bit order is the canonical
/// generator order, so a monomial always denotes its sorted product.
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
    static Monomial single(unsigned rank) { return Monomial(std::uint64_t{1} << rank); }

    std::uint64_t bits() const { return bits_; }
    unsigned degree() const { return static_cast<unsigned>(std::popcount(bits_)); }
    bool empty() const { return bits_ == 0; }
    bool contains(unsigned rank) const { return (bits_ >> rank) & 1u; }
    bool disjoint(const Monomial& o) const { return (bits_ & o.bits_) == 0; }

    auto operator<=>(const Monomial&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Sign of sorting the concatenation a·b into canonical order: parity of the
/// inversions between the two ordered generator lists. Zero when a generator
/// repeats.
inline int wedge_sign(Monomial a, Monomial b) {
    if ((a.bits() & b.bits()) != 0)
        return 0;
    int inversions = 0;
    std::uint64_t rest = b.bits();
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        inversions += std::popcount((a.bits() >> r) >> 1);
        rest &= rest - 1;
    }
    return (inversions & 1) ? -1 : 1;
}

/// Union of two disjoint monomials.
inline Monomial merge_disjoint(Monomial a, Monomial b) {
    return Monomial(a.bits() | b.bits());
}

/// "w[1.1]*w[2.1]^bar" in rank order; "1" for the unit.
std::string render(const Monomial& m, const GeneratorLayout& layout);

/// Inverse of render; throws std::invalid_argument on malformed input,
/// repeated generators, or generators outside the layout.
Monomial parse_monomial(std::string_view text, const GeneratorLayout& layout);

}  // namespace cmlef
