#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cmlef/lefschetz.hpp"

namespace cmlef {

/// Raised when a descent replay contradicts the calculus (vanishing Lambda
/// image with K nonempty, or a support type with the wrong reduced label).
class DescentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// K = I n cJ with the reduced label (I0, J0) = (I - K, J - cK).
struct DescentData {
    std::uint64_t k_mask = 0;  // unbarred bit set
    CycleType reduced;
    unsigned k = 0;
};

DescentData descent_data(const CycleType& t, const GeneratorLayout& layout);

enum class Justification { Axiom, LefschetzComponent, Product, Division, Conjugation };
std::string_view justification_name(Justification j);

struct Derivation {
    Justification kind = Justification::Axiom;
    std::vector<CycleType> premises;
    std::string note;
};

/// The algebraicity ledger: the set of types certified to contain an
/// algebraic generator, with one derivation per entry bottoming out in the
/// axioms (the unit type and the Lefschetz components).
class Ledger {
public:
    explicit Ledger(CMConfig config) : config_(std::move(config)) {}

    const CMConfig& config() const { return config_; }
    const GeneratorLayout& layout() const { return config_.layout(); }

    bool contains(const CycleType& t) const { return entries_.count(t) != 0; }
    /// False when the type was already present (the first derivation wins).
    bool insert(const CycleType& t, Derivation d);
    const Derivation& derivation(const CycleType& t) const;
    const std::map<CycleType, Derivation>& entries() const { return entries_; }
    std::vector<CycleType> types() const;

private:
    CMConfig config_;
    std::map<CycleType, Derivation> entries_;
};

/// Least fixed point of product, division, and conjugation closure starting
/// from the unit type and the (sigma, c sigma) components.
Ledger close_ledger(const CMConfig& config);

/// One replayed descent: the Lambda-chain from t down to its reduced label,
/// and the exact scalar mu with w_t = mu * (L_K ^ w_{I0,J0}).
struct DescentReplay {
    std::vector<CycleType> chain;  // chain.front() = t, chain.back() = (I0, J0)
    DescentData data;
    Scalar mu;
};

/// Walks Lambda from t to (I0, J0), validating at every step that each
/// support type preserves the reduced label. Works for any type; requires a
/// nondegenerate Lefschetz class once K is nonempty.
DescentReplay replay_descent(const LefschetzClass& lc, const CycleType& t);

/// Ledger-facing descent: requires t in the ledger with even weight; inserts
/// the reduced label with a Division derivation and returns it.
CycleType descend(Ledger& ledger, const LefschetzClass& lc, const CycleType& t);

/// Division by the Lefschetz components in k_prime (a subset of I n cJ):
/// descends to (I0, J0), re-multiplies by the remaining components, and
/// inserts (I - K', J - cK').
CycleType divide(Ledger& ledger, const LefschetzClass& lc, const CycleType& t,
                 std::uint64_t k_prime_mask);

}  // namespace cmlef
