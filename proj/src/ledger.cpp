#include "cmlef/ledger.hpp"

#include <stdexcept>

namespace cmlef {

DescentData descent_data(const CycleType& t, const GeneratorLayout& layout) {
    DescentData d;
    d.k_mask = t.i_bits() & layout.unbar_mask(t.j_bits());
    d.reduced = CycleType(t.i_bits() & ~d.k_mask, t.j_bits() & ~layout.bar_mask(d.k_mask), layout);
    d.k = Monomial(d.k_mask).degree();
    return d;
}

std::string_view justification_name(Justification j) {
    switch (j) {
        case Justification::Axiom: return "axiom";
        case Justification::LefschetzComponent: return "lefschetz-component";
        case Justification::Product: return "product";
        case Justification::Division: return "division";
        case Justification::Conjugation: return "conjugation";
    }
    return "unknown";
}

bool Ledger::insert(const CycleType& t, Derivation d) {
    return entries_.emplace(t, std::move(d)).second;
}

const Derivation& Ledger::derivation(const CycleType& t) const {
    const auto it = entries_.find(t);
    if (it == entries_.end())
        throw std::out_of_range("Ledger: type not present");
    return it->second;
}

std::vector<CycleType> Ledger::types() const {
    std::vector<CycleType> out;
    out.reserve(entries_.size());
    for (const auto& [t, d] : entries_)
        out.push_back(t);
    return out;
}

Ledger close_ledger(const CMConfig& config) {
    const GeneratorLayout& layout = config.layout();
    Ledger ledger(config);
    ledger.insert(CycleType{}, {Justification::Axiom, {}, "unit class"});
    for (unsigned r = 0; r < layout.total_genus(); ++r) {
        const std::uint64_t bit = std::uint64_t{1} << r;
        ledger.insert(CycleType(bit, layout.bar_mask(bit), layout),
                      {Justification::LefschetzComponent, {}, layout.name(r)});
    }

    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<CycleType> snapshot = ledger.types();
        for (const CycleType& a : snapshot) {
            for (const CycleType& b : snapshot) {
                if (!a.monomial().disjoint(b.monomial()))
                    continue;
                const CycleType product(a.i_bits() | b.i_bits(), a.j_bits() | b.j_bits(), layout);
                changed |= ledger.insert(product, {Justification::Product, {a, b}, ""});
            }
        }
        for (const CycleType& t : snapshot) {
            changed |=
                ledger.insert(t.conjugate(layout), {Justification::Conjugation, {t}, ""});
            const DescentData d = descent_data(t, layout);
            // All divisors K' of K = I n cJ, nonempty.
            for (std::uint64_t sub = d.k_mask; sub != 0; sub = (sub - 1) & d.k_mask) {
                const CycleType divided(t.i_bits() & ~sub,
                                        t.j_bits() & ~layout.bar_mask(sub), layout);
                changed |= ledger.insert(divided, {Justification::Division, {t}, ""});
            }
        }
    }
    return ledger;
}

DescentReplay replay_descent(const LefschetzClass& lc, const CycleType& t) {
    const GeneratorLayout& layout = lc.layout();
    DescentReplay replay;
    replay.data = descent_data(t, layout);
    replay.chain.push_back(t);

    CycleType current = t;
    while (descent_data(current, layout).k_mask != 0) {
        const std::set<CycleType> support = lc.lambda_type_support(current);
        if (support.empty())
            throw DescentError("descent: Lambda image vanished at type " +
                               render(current, layout));
        for (const CycleType& s : support) {
            if (descent_data(s, layout).reduced != replay.data.reduced)
                throw DescentError("descent: support type " + render(s, layout) +
                                   " does not preserve the reduced label of " +
                                   render(t, layout));
        }
        current = *support.begin();
        replay.chain.push_back(current);
    }
    if (current != replay.data.reduced)
        throw DescentError("descent: chain did not reach the reduced label of " +
                           render(t, layout));

    // w_t = mu * (L_K ^ w_{I0,J0}); both sides are multiples of the same
    // monomial, so mu is the inverse of one exact coefficient.
    const Element product =
        wedge(lc.component_product(replay.data.k_mask), Element::term(replay.data.reduced.monomial(), 1));
    const Scalar nu = product.coefficient(t.monomial());
    if (nu.is_zero())
        throw DescentError("descent: L_K times the reduced generator vanished at type " +
                           render(t, layout));
    replay.mu = nu.inverse();
    return replay;
}

CycleType descend(Ledger& ledger, const LefschetzClass& lc, const CycleType& t) {
    if (!ledger.contains(t))
        throw std::invalid_argument("descend: type not in ledger");
    if (t.weight() % 2 != 0)
        throw std::invalid_argument("descend: type weight must be even");
    const DescentReplay replay = replay_descent(lc, t);
    std::string note = "lambda-chain:";
    for (const CycleType& step : replay.chain)
        note += " " + render(step, ledger.layout());
    ledger.insert(replay.data.reduced, {Justification::Division, {t}, std::move(note)});
    return replay.data.reduced;
}

CycleType divide(Ledger& ledger, const LefschetzClass& lc, const CycleType& t,
                 std::uint64_t k_prime_mask) {
    const GeneratorLayout& layout = ledger.layout();
    if (!ledger.contains(t))
        throw std::invalid_argument("divide: type not in ledger");
    const DescentData d = descent_data(t, layout);
    if ((k_prime_mask & ~d.k_mask) != 0)
        throw std::invalid_argument("divide: divisor set not contained in I n cJ");

    const DescentReplay replay = replay_descent(lc, t);
    // Re-multiply the reduced generator by the components kept.
    const std::uint64_t kept = d.k_mask & ~k_prime_mask;
    const Element remultiplied =
        wedge(lc.component_product(kept), Element::term(replay.data.reduced.monomial(), 1));
    const CycleType result(t.i_bits() & ~k_prime_mask,
                           t.j_bits() & ~layout.bar_mask(k_prime_mask), layout);
    if (remultiplied.coefficient(result.monomial()).is_zero())
        throw DescentError("divide: re-multiplied class vanished at type " + render(t, layout));
    ledger.insert(result, {Justification::Division, {t}, ""});
    return result;
}

}  // namespace cmlef
