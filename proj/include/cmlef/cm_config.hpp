#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmlef/element.hpp"

namespace cmlef {

/// Factor configuration (g_1, ..., g_N) of the model together with its
/// generator layout. Immutable after construction.
class CMConfig {
public:
    explicit CMConfig(std::vector<unsigned> factor_genera) : layout_(std::move(factor_genera)) {}

    const GeneratorLayout& layout() const { return layout_; }
    unsigned total_genus() const { return layout_.total_genus(); }
    unsigned factor_count() const { return layout_.factor_count(); }
    const std::vector<unsigned>& factor_genera() const { return layout_.factor_genera(); }

    friend bool operator==(const CMConfig& a, const CMConfig& b) {
        return a.layout_ == b.layout_;
    }

private:
    GeneratorLayout layout_;
};

/// Isotypic label (I, J): I a set of unbarred generators, J a set of barred
/// ones, componentwise over factors. Types are in bijection with basis
/// monomials via the union of the two bit sets.
class CycleType {
public:
    CycleType() = default;
    CycleType(std::uint64_t i_bits, std::uint64_t j_bits, const GeneratorLayout& layout);

    /// The type of a monomial: unbarred part, barred part.
    static CycleType of(const Monomial& m, const GeneratorLayout& layout);

    std::uint64_t i_bits() const { return i_bits_; }
    std::uint64_t j_bits() const { return j_bits_; }
    unsigned weight() const { return Monomial(i_bits_ | j_bits_).degree(); }
    Monomial monomial() const { return Monomial(i_bits_ | j_bits_); }

    /// (I, J) -> (cJ, cI).
    CycleType conjugate(const GeneratorLayout& layout) const;

    auto operator<=>(const CycleType&) const = default;

private:
    std::uint64_t i_bits_ = 0;
    std::uint64_t j_bits_ = 0;
};

std::string render(const CycleType& t, const GeneratorLayout& layout);

/// Embedding images of one endomorphism: a total map generator -> scalar.
class EigenvalueTuple {
public:
    EigenvalueTuple(std::vector<Scalar> values, const GeneratorLayout& layout);

    static EigenvalueTuple ones(const GeneratorLayout& layout);
    /// zeta with zeta^sigma = 1, zeta^{c sigma} = -1: the default skew tuple.
    static EigenvalueTuple standard_skew(const GeneratorLayout& layout);

    const Scalar& at(unsigned rank) const { return values_.at(rank); }
    const Scalar& at(const GeneratorIndex& ix, const GeneratorLayout& layout) const {
        return values_.at(layout.rank(ix));
    }
    std::size_t size() const { return values_.size(); }

    /// prod_{r in mask} value_r.
    Scalar product_over(std::uint64_t mask) const;

    /// True iff value^{c sigma} = -value^sigma for every unbarred sigma.
    bool is_skew(const GeneratorLayout& layout) const;

    friend bool operator==(const EigenvalueTuple&, const EigenvalueTuple&) = default;

private:
    std::vector<Scalar> values_;
};

// --- cm_structure operations -------------------------------------------

inline CycleType type_of(const Monomial& m, const GeneratorLayout& layout) {
    return CycleType::of(m, layout);
}

/// Keeps exactly the terms of isotypic type t.
Element project(const Element& a, const CycleType& t, const GeneratorLayout& layout);

/// Groups the terms of a by isotypic type.
std::map<CycleType, Element> type_decomposition(const Element& a, const GeneratorLayout& layout);

/// Scales each term of type (I, J) by lambda^I lambda^J.
Element endo_action(const EigenvalueTuple& lambda, const Element& a,
                    const GeneratorLayout& layout);

/// True iff pi^sigma pi^{c sigma} = q for every unbarred sigma. Requires
/// q > 0.
bool validate_frobenius(const EigenvalueTuple& pi, const Scalar& q,
                        const GeneratorLayout& layout);

inline CycleType conjugate_type(const CycleType& t, const GeneratorLayout& layout) {
    return t.conjugate(layout);
}

/// sum_sigma zeta^sigma w_sigma w_{c sigma}. Requires zeta skew under the
/// bar involution (throws otherwise); zero components are allowed here and
/// reported by degenerate_components.
Element riemann_form_element(const EigenvalueTuple& zeta, const GeneratorLayout& layout);

/// The unbarred generators sigma with zeta^sigma = 0.
std::vector<GeneratorIndex> degenerate_components(const EigenvalueTuple& zeta,
                                                  const GeneratorLayout& layout);

// --- JSON input ----------------------------------------------------------

/// Parsed model document: {"factors":[...], "frobenius":{"q":..,"values":..},
/// "zeta":{...}}. Unknown keys are rejected; frobenius, when present, must
/// satisfy validate_frobenius.
struct ModelInput {
    CMConfig config;
    std::optional<Scalar> frobenius_q;
    std::optional<EigenvalueTuple> frobenius;
    std::optional<EigenvalueTuple> zeta;
};

ModelInput load_model_input(const nlohmann::json& doc);

/// Map form {"w[1.1]":"p/q", ...}; must cover every generator exactly once.
EigenvalueTuple parse_eigenvalue_map(const nlohmann::json& map, const GeneratorLayout& layout);
nlohmann::json eigenvalue_map_to_json(const EigenvalueTuple& values,
                                      const GeneratorLayout& layout);

}  // namespace cmlef
