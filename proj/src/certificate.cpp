#include "cmlef/certificate.hpp"

#include <bit>

namespace cmlef {

nlohmann::json mask_to_names(std::uint64_t mask, const GeneratorLayout& layout) {
    nlohmann::json out = nlohmann::json::array();
    std::uint64_t rest = mask;
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        out.push_back(layout.name(r));
        rest &= rest - 1;
    }
    return out;
}

nlohmann::json type_to_json(const CycleType& t, const GeneratorLayout& layout) {
    return {{"I", mask_to_names(t.i_bits(), layout)}, {"J", mask_to_names(t.j_bits(), layout)}};
}

Certificate certify_theorem(const LefschetzClass& lc) {
    const CMConfig& config = lc.config();
    const GeneratorLayout& layout = config.layout();
    if (lc.is_degenerate()) {
        const auto zeros = lc.degenerate_generators();
        std::string what = "certification withheld: vanishing Lefschetz components at";
        for (const auto& ix : zeros)
            what += " " + layout.name(ix);
        throw DegenerateZetaError(std::move(what), zeros);
    }

    Certificate cert{config, lc.zeta(), {}, {}, true};
    const Ledger ledger = close_ledger(config);
    for (const auto& [t, derivation] : ledger.entries()) {
        if (derivation.kind == Justification::Axiom ||
            derivation.kind == Justification::LefschetzComponent)
            cert.axioms.emplace_back(t, derivation.kind);
    }

    const std::uint64_t full = layout.full_mask();
    for (std::uint64_t bits = 0;; ++bits) {
        const CycleType t = CycleType::of(Monomial(bits), layout);
        const DescentReplay replay = replay_descent(lc, t);

        CertificateRecord rec;
        rec.type = t;
        rec.data = replay.data;
        rec.mu = replay.mu;
        rec.partner = replay.data.reduced.conjugate(layout);
        rec.h_mask = layout.unbarred_mask() &
                     ~(replay.data.k_mask | replay.data.reduced.i_bits() |
                       layout.unbar_mask(replay.data.reduced.j_bits()));

        const Element witness =
            wedge(lc.component_product(rec.h_mask),
                  wedge(Element::term(t.monomial(), 1), Element::term(rec.partner.monomial(), 1)));
        rec.trace = top_trace(witness, layout);

        for (std::size_t i = 0; i + 1 < replay.chain.size(); ++i)
            rec.derivation.push_back("descend: " + render(replay.chain[i], layout) + " => " +
                                     render(replay.chain[i + 1], layout));
        rec.derivation.push_back("conjugate: " + render(replay.data.reduced, layout) + " => " +
                                 render(rec.partner, layout));
        std::string pair_line = "pair: L[";
        bool first = true;
        std::uint64_t rest = rec.h_mask;
        while (rest) {
            const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
            if (!first)
                pair_line += ",";
            pair_line += layout.name(r);
            first = false;
            rest &= rest - 1;
        }
        pair_line += "] * " + render(t.monomial(), layout) + " * " +
                     render(rec.partner.monomial(), layout);
        rec.derivation.push_back(std::move(pair_line));

        if (rec.trace.is_zero() || rec.mu.is_zero())
            cert.verdict = false;
        cert.records.push_back(std::move(rec));
        if (bits == full)
            break;
    }
    return cert;
}

Certificate certify_theorem(const CMConfig& config) {
    const LefschetzClass lc = LefschetzClass::standard(config);
    return certify_theorem(lc);
}

nlohmann::json to_json(const Certificate& cert) {
    const GeneratorLayout& layout = cert.config.layout();
    nlohmann::json doc;
    doc["format"] = "cmlef-certificate-v1";
    doc["config"] = {{"factors", cert.config.factor_genera()},
                     {"zeta", eigenvalue_map_to_json(cert.zeta, layout)}};
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& [t, kind] : cert.axioms)
        axioms.push_back({{"type", type_to_json(t, layout)},
                          {"justification", std::string(justification_name(kind))}});
    doc["axioms"] = std::move(axioms);
    nlohmann::json records = nlohmann::json::array();
    for (const CertificateRecord& rec : cert.records) {
        records.push_back({{"type", type_to_json(rec.type, layout)},
                           {"K", mask_to_names(rec.data.k_mask, layout)},
                           {"I0", mask_to_names(rec.data.reduced.i_bits(), layout)},
                           {"J0", mask_to_names(rec.data.reduced.j_bits(), layout)},
                           {"partner", type_to_json(rec.partner, layout)},
                           {"H", mask_to_names(rec.h_mask, layout)},
                           {"mu", rec.mu.str()},
                           {"trace", rec.trace.str()},
                           {"derivation", rec.derivation}});
    }
    doc["records"] = std::move(records);
    doc["verdict"] = cert.verdict;
    return doc;
}

}  // namespace cmlef
