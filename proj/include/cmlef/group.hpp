#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cmlef/scalar.hpp"

namespace cmlef {

/// Raised by group validation and by the central-involution checks; the
/// message names the failing triple or element.
class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite group given by its full multiplication table. Elements are
/// 0..n-1 with identity 0; construction through validated() checks closure,
/// identity, inverses, and associativity exhaustively.
class FiniteGroup {
public:
    static FiniteGroup validated(std::vector<std::vector<unsigned>> table);

    unsigned order() const { return static_cast<unsigned>(table_.size()); }
    unsigned identity() const { return 0; }
    unsigned mul(unsigned a, unsigned b) const { return table_[a][b]; }
    unsigned inverse(unsigned a) const;
    unsigned element_order(unsigned a) const;
    bool is_central(unsigned a) const;
    bool is_involution(unsigned a) const { return a != 0 && mul(a, a) == 0; }

    /// The cyclic subgroup generated by a, in power order starting at a.
    std::vector<unsigned> cyclic_subgroup(unsigned a) const;

    const std::vector<std::vector<unsigned>>& table() const { return table_; }

private:
    explicit FiniteGroup(std::vector<std::vector<unsigned>> table) : table_(std::move(table)) {}
    std::vector<std::vector<unsigned>> table_;
};

/// Throws GroupError unless c is a central involution of G.
void validate_central_involution(const FiniteGroup& g, unsigned c);

/// Exact density of elements whose cyclic subgroup contains c (the favorable
/// Frobenius classes); always >= 1/|G| since c itself qualifies.
struct DensityReport {
    unsigned order = 0;
    unsigned c = 0;
    unsigned favorable_count = 0;
    Scalar density;
    std::vector<unsigned> favorable;
};

DensityReport frobenius_density(const FiniteGroup& g, unsigned c);
nlohmann::json to_json(const DensityReport& report);

/// True iff {identity, c} is normal and the coset table is again a group of
/// order |G|/2. Requires a validated central involution.
bool quotient_check(const FiniteGroup& g, unsigned c);

// --- permutation input ----------------------------------------------------

/// A permutation as the image vector of 0-based points.
using Permutation = std::vector<unsigned>;

/// Parses disjoint-cycle notation on 1-based points, e.g. "(1 2 3)(4 5)";
/// "()" is the identity. degree is grown to the largest point seen.
Permutation parse_cycles(std::string_view text);

struct GeneratedGroup {
    FiniteGroup group;
    std::vector<Permutation> elements;  // elements[i] realizes group element i
    std::vector<unsigned> generator_elements;
};

/// Closure of the generators under composition, identity first; throws
/// GroupError when the closure exceeds max_order.
GeneratedGroup group_from_permutations(const std::vector<std::string>& generators,
                                       unsigned max_order = 100000);

/// Group spec document: either {"order":n, "table":[[...]], "c":k} or
/// {"perm_generators":["(1 2)",...], "c": <cycles | "g0*g1..." | index>}.
/// Unknown keys are rejected; the table or closure is validated.
struct GroupSpec {
    FiniteGroup group;
    unsigned c = 0;
};

GroupSpec load_group_spec(const nlohmann::json& doc);

}  // namespace cmlef
