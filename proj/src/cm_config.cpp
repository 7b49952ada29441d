#include "cmlef/cm_config.hpp"

#include <bit>
#include <stdexcept>

namespace cmlef {

CycleType::CycleType(std::uint64_t i_bits, std::uint64_t j_bits, const GeneratorLayout& layout)
    : i_bits_(i_bits), j_bits_(j_bits) {
    if ((i_bits & ~layout.unbarred_mask()) != 0)
        throw std::invalid_argument("CycleType: I must consist of unbarred generators");
    if ((j_bits & ~layout.barred_mask()) != 0)
        throw std::invalid_argument("CycleType: J must consist of barred generators");
}

CycleType CycleType::of(const Monomial& m, const GeneratorLayout& layout) {
    if ((m.bits() & ~layout.full_mask()) != 0)
        throw std::invalid_argument("CycleType: monomial outside layout");
    CycleType t;
    t.i_bits_ = m.bits() & layout.unbarred_mask();
    t.j_bits_ = m.bits() & layout.barred_mask();
    return t;
}

CycleType CycleType::conjugate(const GeneratorLayout& layout) const {
    CycleType t;
    t.i_bits_ = layout.unbar_mask(j_bits_);
    t.j_bits_ = layout.bar_mask(i_bits_);
    return t;
}

std::string render(const CycleType& t, const GeneratorLayout& layout) {
    return render(t.monomial(), layout);
}

EigenvalueTuple::EigenvalueTuple(std::vector<Scalar> values, const GeneratorLayout& layout)
    : values_(std::move(values)) {
    if (values_.size() != layout.generator_count())
        throw std::invalid_argument("EigenvalueTuple: must be total on all generators");
}

EigenvalueTuple EigenvalueTuple::ones(const GeneratorLayout& layout) {
    return EigenvalueTuple(std::vector<Scalar>(layout.generator_count(), Scalar(1)), layout);
}

EigenvalueTuple EigenvalueTuple::standard_skew(const GeneratorLayout& layout) {
    std::vector<Scalar> v(layout.generator_count(), Scalar(1));
    for (unsigned r = layout.total_genus(); r < layout.generator_count(); ++r)
        v[r] = Scalar(-1);
    return EigenvalueTuple(std::move(v), layout);
}

Scalar EigenvalueTuple::product_over(std::uint64_t mask) const {
    Scalar out(1);
    std::uint64_t rest = mask;
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        out *= values_.at(r);
        rest &= rest - 1;
    }
    return out;
}

bool EigenvalueTuple::is_skew(const GeneratorLayout& layout) const {
    const unsigned g = layout.total_genus();
    for (unsigned r = 0; r < g; ++r)
        if (values_[r + g] != -values_[r])
            return false;
    return true;
}

Element project(const Element& a, const CycleType& t, const GeneratorLayout& layout) {
    Element out;
    for (const auto& [m, c] : a.terms())
        if (CycleType::of(m, layout) == t)
            out.add_term(m, c);
    return out;
}

std::map<CycleType, Element> type_decomposition(const Element& a, const GeneratorLayout& layout) {
    std::map<CycleType, Element> out;
    for (const auto& [m, c] : a.terms())
        out[CycleType::of(m, layout)].add_term(m, c);
    return out;
}

Element endo_action(const EigenvalueTuple& lambda, const Element& a,
                    const GeneratorLayout& layout) {
    if (lambda.size() != layout.generator_count())
        throw std::invalid_argument("endo_action: tuple does not match layout");
    Element out;
    for (const auto& [m, c] : a.terms())
        out.add_term(m, c * lambda.product_over(m.bits()));
    return out;
}

bool validate_frobenius(const EigenvalueTuple& pi, const Scalar& q,
                        const GeneratorLayout& layout) {
    if (!(q > Scalar(0)))
        throw std::invalid_argument("validate_frobenius: q must be positive");
    const unsigned g = layout.total_genus();
    for (unsigned r = 0; r < g; ++r)
        if (pi.at(r) * pi.at(r + g) != q)
            return false;
    return true;
}

Element riemann_form_element(const EigenvalueTuple& zeta, const GeneratorLayout& layout) {
    if (!zeta.is_skew(layout))
        throw std::invalid_argument("riemann_form_element: zeta is not skew under conjugation");
    const unsigned g = layout.total_genus();
    Element out;
    for (unsigned r = 0; r < g; ++r) {
        const Monomial pair(
            (std::uint64_t{1} << r) | (std::uint64_t{1} << (r + g)));
        out.add_term(pair, zeta.at(r));
    }
    return out;
}

std::vector<GeneratorIndex> degenerate_components(const EigenvalueTuple& zeta,
                                                  const GeneratorLayout& layout) {
    std::vector<GeneratorIndex> out;
    for (unsigned r = 0; r < layout.total_genus(); ++r)
        if (zeta.at(r).is_zero())
            out.push_back(layout.generator(r));
    return out;
}

namespace {

bool json_positive_uint(const nlohmann::json& v, std::uint64_t& out) {
    if (v.is_number_unsigned())
        out = v.get<std::uint64_t>();
    else if (v.is_number_integer() && v.get<std::int64_t>() > 0)
        out = static_cast<std::uint64_t>(v.get<std::int64_t>());
    else
        return false;
    return out > 0;
}

void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            ok = ok || key == k;
        if (!ok)
            throw std::invalid_argument(std::string("config: unknown key '") + key + "' in " +
                                        where);
    }
}

}  // namespace

EigenvalueTuple parse_eigenvalue_map(const nlohmann::json& map, const GeneratorLayout& layout) {
    if (!map.is_object())
        throw std::invalid_argument("config: eigenvalue map must be a JSON object");
    std::vector<Scalar> values(layout.generator_count());
    std::vector<bool> seen(layout.generator_count(), false);
    for (const auto& [key, value] : map.items()) {
        const unsigned r = layout.rank(layout.parse_generator(key));
        if (seen[r])
            throw std::invalid_argument("config: duplicate generator '" + key + "'");
        if (!value.is_string())
            throw std::invalid_argument("config: eigenvalue for '" + key + "' must be a string");
        values[r] = Scalar::from_string(value.get<std::string>());
        seen[r] = true;
    }
    for (unsigned r = 0; r < layout.generator_count(); ++r)
        if (!seen[r])
            throw std::invalid_argument("config: eigenvalue map is missing '" + layout.name(r) +
                                        "'");
    return EigenvalueTuple(std::move(values), layout);
}

nlohmann::json eigenvalue_map_to_json(const EigenvalueTuple& values,
                                      const GeneratorLayout& layout) {
    nlohmann::json out = nlohmann::json::object();
    for (unsigned r = 0; r < layout.generator_count(); ++r)
        out[layout.name(r)] = values.at(r).str();
    return out;
}

ModelInput load_model_input(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw std::invalid_argument("config: document must be a JSON object");
    reject_unknown_keys(doc, {"factors", "frobenius", "zeta"}, "the top-level document");
    if (!doc.contains("factors") || !doc["factors"].is_array() || doc["factors"].empty())
        throw std::invalid_argument("config: 'factors' must be a non-empty array");
    std::vector<unsigned> genera;
    for (const auto& item : doc["factors"]) {
        std::uint64_t value = 0;
        if (!json_positive_uint(item, value) || value > 32)
            throw std::invalid_argument("config: factor genera must be positive integers");
        genera.push_back(static_cast<unsigned>(value));
    }
    ModelInput input{CMConfig(std::move(genera)), std::nullopt, std::nullopt, std::nullopt};
    const GeneratorLayout& layout = input.config.layout();

    if (doc.contains("frobenius")) {
        const auto& fr = doc["frobenius"];
        if (!fr.is_object())
            throw std::invalid_argument("config: 'frobenius' must be an object");
        reject_unknown_keys(fr, {"q", "values"}, "'frobenius'");
        if (!fr.contains("q") || !fr["q"].is_string())
            throw std::invalid_argument("config: frobenius 'q' must be a rational string");
        if (!fr.contains("values"))
            throw std::invalid_argument("config: frobenius 'values' is required");
        input.frobenius_q = Scalar::from_string(fr["q"].get<std::string>());
        input.frobenius = parse_eigenvalue_map(fr["values"], layout);
        if (!validate_frobenius(*input.frobenius, *input.frobenius_q, layout))
            throw std::invalid_argument(
                "config: frobenius values violate pi^sigma * pi^{c sigma} = q");
    }
    if (doc.contains("zeta"))
        input.zeta = parse_eigenvalue_map(doc["zeta"], layout);
    return input;
}

}  // namespace cmlef
