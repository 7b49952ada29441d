// Independent certificate checker. Depends only on the exterior-algebra
// core: every quantity in the certificate is recomputed from the raw masks
// and wedge products, with no use of the ledger, descent, or theta machinery.

#include "cmlef/checker.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <vector>

#include "cmlef/element.hpp"

namespace cmlef {

namespace {

struct MalformedCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RecordMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t names_to_mask(const nlohmann::json& names, const GeneratorLayout& layout,
                            const char* field) {
    if (!names.is_array())
        throw RecordMismatch(std::string(field) + " is not an array");
    std::uint64_t mask = 0;
    for (const auto& name : names) {
        if (!name.is_string())
            throw RecordMismatch(std::string(field) + " contains a non-string entry");
        const unsigned r = layout.rank(layout.parse_generator(name.get<std::string>()));
        const std::uint64_t bit = std::uint64_t{1} << r;
        if (mask & bit)
            throw RecordMismatch(std::string(field) + " repeats a generator");
        mask |= bit;
    }
    return mask;
}

struct TypeMasks {
    std::uint64_t i = 0;
    std::uint64_t j = 0;
};

TypeMasks parse_type(const nlohmann::json& type, const GeneratorLayout& layout,
                     const char* field) {
    if (!type.is_object() || !type.contains("I") || !type.contains("J") || type.size() != 2)
        throw RecordMismatch(std::string(field) + " is not a type object");
    TypeMasks t;
    t.i = names_to_mask(type["I"], layout, field);
    t.j = names_to_mask(type["J"], layout, field);
    if ((t.i & ~layout.unbarred_mask()) != 0 || (t.j & ~layout.barred_mask()) != 0)
        throw RecordMismatch(std::string(field) + " has generators on the wrong side");
    return t;
}

Scalar parse_scalar(const nlohmann::json& value, const char* field) {
    if (!value.is_string())
        throw RecordMismatch(std::string(field) + " is not a string");
    try {
        return Scalar::from_string(value.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw RecordMismatch(std::string(field) + " is not a rational");
    }
}

/// zeta^r * w_r w_{r+g} for each unbarred rank in the mask, wedged together.
Element component_product(std::uint64_t mask, const std::vector<Scalar>& zeta,
                          const GeneratorLayout& layout) {
    const unsigned g = layout.total_genus();
    Element out = Element::unit();
    std::uint64_t rest = mask;
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        const Monomial pair((std::uint64_t{1} << r) | (std::uint64_t{1} << (r + g)));
        out = wedge(out, Element::term(pair, zeta[r]));
        rest &= rest - 1;
    }
    return out;
}

void check_derivation(const nlohmann::json& derivation, const GeneratorLayout& layout,
                      std::uint64_t type_bits, std::uint64_t reduced_bits,
                      std::uint64_t partner_bits, std::uint64_t h_mask) {
    if (!derivation.is_array() || derivation.size() < 2)
        throw RecordMismatch("derivation is not a step list");
    std::vector<std::string> lines;
    for (const auto& line : derivation) {
        if (!line.is_string())
            throw RecordMismatch("derivation contains a non-string step");
        lines.push_back(line.get<std::string>());
    }

    const auto parse_mono = [&](std::string_view text) {
        return parse_monomial(text, layout).bits();
    };

    std::uint64_t current = type_bits;
    std::size_t idx = 0;
    for (; idx + 2 < lines.size(); ++idx) {
        const std::string& line = lines[idx];
        if (line.rfind("descend: ", 0) != 0)
            throw RecordMismatch("derivation step " + std::to_string(idx) + " is not a descent");
        const std::string body = line.substr(9);
        const auto arrow = body.find(" => ");
        if (arrow == std::string::npos)
            throw RecordMismatch("derivation step " + std::to_string(idx) + " is malformed");
        const std::uint64_t from = parse_mono(body.substr(0, arrow));
        const std::uint64_t to = parse_mono(body.substr(arrow + 4));
        if (from != current)
            throw RecordMismatch("derivation chain is not connected");
        if (Monomial(from).degree() != Monomial(to).degree() + 2)
            throw RecordMismatch("derivation step does not lower degree by 2");
        current = to;
    }
    if (current != reduced_bits)
        throw RecordMismatch("derivation chain does not reach the reduced type");

    const std::string expected_conjugate = "conjugate: " + render(Monomial(reduced_bits), layout) +
                                           " => " + render(Monomial(partner_bits), layout);
    if (lines[idx] != expected_conjugate)
        throw RecordMismatch("derivation conjugation step is inconsistent");
    ++idx;

    std::string expected_pair = "pair: L[";
    bool first = true;
    std::uint64_t rest = h_mask;
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        if (!first)
            expected_pair += ",";
        expected_pair += layout.name(r);
        first = false;
        rest &= rest - 1;
    }
    expected_pair += "] * " + render(Monomial(type_bits), layout) + " * " +
                     render(Monomial(partner_bits), layout);
    if (lines[idx] != expected_pair)
        throw RecordMismatch("derivation pairing step is inconsistent");
}

CheckResult check_impl(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw MalformedCertificate("certificate is not a JSON object");
    for (const char* key : {"format", "config", "axioms", "records", "verdict"})
        if (!doc.contains(key))
            throw MalformedCertificate(std::string("certificate is missing '") + key + "'");
    if (doc.size() != 5)
        throw MalformedCertificate("certificate has unexpected top-level keys");
    if (!doc["format"].is_string() || doc["format"].get<std::string>() != "cmlef-certificate-v1")
        throw MalformedCertificate("unsupported certificate format");

    const auto& config = doc["config"];
    if (!config.is_object() || !config.contains("factors") || !config.contains("zeta") ||
        config.size() != 2)
        throw MalformedCertificate("certificate config must hold factors and zeta");
    if (!config["factors"].is_array() || config["factors"].empty())
        throw MalformedCertificate("certificate factors must be a non-empty array");
    std::vector<unsigned> genera;
    for (const auto& item : config["factors"]) {
        if (!item.is_number_unsigned() || item.get<std::uint64_t>() == 0 ||
            item.get<std::uint64_t>() > 64)
            throw MalformedCertificate("certificate factors must be positive integers");
        genera.push_back(item.get<unsigned>());
    }
    const GeneratorLayout layout(std::move(genera));
    const unsigned g = layout.total_genus();

    const auto& zeta_json = config["zeta"];
    if (!zeta_json.is_object())
        throw MalformedCertificate("certificate zeta must be an object");
    std::vector<Scalar> zeta(layout.generator_count());
    std::vector<bool> seen(layout.generator_count(), false);
    for (const auto& [key, value] : zeta_json.items()) {
        unsigned r = 0;
        try {
            r = layout.rank(layout.parse_generator(key));
        } catch (const std::exception&) {
            throw MalformedCertificate("certificate zeta names an unknown generator");
        }
        if (seen[r] || !value.is_string())
            throw MalformedCertificate("certificate zeta map is malformed");
        zeta[r] = Scalar::from_string(value.get<std::string>());
        seen[r] = true;
    }
    for (bool s : seen)
        if (!s)
            throw MalformedCertificate("certificate zeta map is not total");

    // Axioms: the unit type plus one Lefschetz component per unbarred rank.
    const auto& axioms = doc["axioms"];
    if (!axioms.is_array() || axioms.size() != std::size_t{g} + 1)
        throw MalformedCertificate("certificate axiom list has the wrong size");
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const auto& ax = axioms[i];
        if (!ax.is_object() || !ax.contains("type") || !ax.contains("justification") ||
            ax.size() != 2)
            throw MalformedCertificate("certificate axiom entry is malformed");
        TypeMasks t = parse_type(ax["type"], layout, "axiom type");
        const std::string just = ax["justification"].is_string()
                                     ? ax["justification"].get<std::string>()
                                     : std::string();
        if (i == 0) {
            if (t.i != 0 || t.j != 0 || just != "axiom")
                throw MalformedCertificate("certificate axiom list must start with the unit type");
        } else {
            const std::uint64_t bit = std::uint64_t{1} << (i - 1);
            if (t.i != bit || t.j != bit << g || just != "lefschetz-component")
                throw MalformedCertificate("certificate Lefschetz components are inconsistent");
        }
    }

    const auto& records = doc["records"];
    const std::uint64_t type_count = std::uint64_t{1} << layout.generator_count();
    if (!records.is_array() || records.size() != type_count)
        throw MalformedCertificate("certificate must carry one record per isotypic type");

    bool all_nonzero = true;
    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        try {
            const auto& rec = records[idx];
            if (!rec.is_object())
                throw RecordMismatch("record is not an object");
            for (const char* key :
                 {"type", "K", "I0", "J0", "partner", "H", "mu", "trace", "derivation"})
                if (!rec.contains(key))
                    throw RecordMismatch(std::string("record is missing '") + key + "'");

            const TypeMasks type = parse_type(rec["type"], layout, "type");
            const std::uint64_t bits = type.i | type.j;
            if (bits != static_cast<std::uint64_t>(idx))
                throw RecordMismatch("record is out of canonical type order");

            // Recompute the descent data from scratch.
            const std::uint64_t k = type.i & layout.unbar_mask(type.j);
            const std::uint64_t i0 = type.i & ~k;
            const std::uint64_t j0 = type.j & ~layout.bar_mask(k);
            const std::uint64_t partner_i = layout.unbar_mask(j0);
            const std::uint64_t partner_j = layout.bar_mask(i0);
            const std::uint64_t h = layout.unbarred_mask() & ~(k | i0 | layout.unbar_mask(j0));

            if (names_to_mask(rec["K"], layout, "K") != k)
                throw RecordMismatch("descent set K disagrees with the type");
            if (names_to_mask(rec["I0"], layout, "I0") != i0)
                throw RecordMismatch("reduced set I0 disagrees with the type");
            if (names_to_mask(rec["J0"], layout, "J0") != j0)
                throw RecordMismatch("reduced set J0 disagrees with the type");
            const TypeMasks partner = parse_type(rec["partner"], layout, "partner");
            if (partner.i != partner_i || partner.j != partner_j)
                throw RecordMismatch("partner type is not the conjugated reduced type");
            if (names_to_mask(rec["H"], layout, "H") != h)
                throw RecordMismatch("complement set H disagrees with the type");

            // Recompute the pairing witness trace.
            const Element witness =
                wedge(component_product(h, zeta, layout),
                      wedge(Element::term(Monomial(bits), 1),
                            Element::term(Monomial(partner_i | partner_j), 1)));
            const Scalar trace = top_trace(witness, layout);
            const Scalar recorded_trace = parse_scalar(rec["trace"], "trace");
            if (trace != recorded_trace)
                throw RecordMismatch("recorded trace " + recorded_trace.str() +
                                     " disagrees with recomputed " + trace.str());
            if (trace.is_zero())
                all_nonzero = false;

            // mu must invert the exact coefficient of L_K ^ w_{I0,J0} on w_t.
            const Scalar mu = parse_scalar(rec["mu"], "mu");
            const Element rebuilt = wedge(component_product(k, zeta, layout),
                                          Element::term(Monomial(i0 | j0), 1));
            const Scalar nu = rebuilt.coefficient(Monomial(bits));
            if (nu.is_zero() || mu * nu != Scalar(1))
                throw RecordMismatch("mu does not invert the Lefschetz division scalar");

            check_derivation(rec["derivation"], layout, bits, i0 | j0, partner_i | partner_j, h);
        } catch (const RecordMismatch& e) {
            return {CheckStatus::Mismatch, static_cast<int>(idx), e.what()};
        } catch (const std::exception& e) {
            // Anything unparseable inside a record is that record's problem.
            return {CheckStatus::Mismatch, static_cast<int>(idx), e.what()};
        }
    }

    if (!doc["verdict"].is_boolean())
        throw MalformedCertificate("certificate verdict must be boolean");
    if (doc["verdict"].get<bool>() != all_nonzero)
        return {CheckStatus::Mismatch, -1, "verdict disagrees with the recomputed traces"};
    return {CheckStatus::Confirmed, -1,
            "confirmed " + std::to_string(records.size()) + " records"};
}

}  // namespace

CheckResult check_certificate(const nlohmann::json& doc) {
    try {
        return check_impl(doc);
    } catch (const MalformedCertificate& e) {
        return {CheckStatus::Malformed, -1, e.what()};
    } catch (const std::exception& e) {
        return {CheckStatus::Malformed, -1, e.what()};
    }
}

CheckResult check_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return {CheckStatus::Malformed, -1, "cannot open '" + path + "'"};
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        return {CheckStatus::Malformed, -1, std::string("JSON parse error: ") + e.what()};
    }
    return check_certificate(doc);
}

}  // namespace cmlef
