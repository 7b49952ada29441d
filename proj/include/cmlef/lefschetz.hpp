#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cmlef/cm_config.hpp"

namespace cmlef {

/// Raised when a Lefschetz power fails to be invertible in some degree,
/// which in this model happens exactly when some zeta component vanishes.
class HardLefschetzError : public std::runtime_error {
public:
    HardLefschetzError(unsigned degree, std::string what)
        : std::runtime_error(std::move(what)), degree_(degree) {}
    unsigned degree() const { return degree_; }

private:
    unsigned degree_;
};

/// Dense exact matrix of a degree-homogeneous operator, indexed by the
/// canonical monomial bases of its domain and codomain degrees.
class OperatorMatrix {
public:
    OperatorMatrix(unsigned domain_degree, unsigned codomain_degree,
                   std::vector<Monomial> domain_basis, std::vector<Monomial> codomain_basis);

    /// Matrix of x -> x ^ multiplier on H^domain_degree. The multiplier must
    /// be homogeneous.
    static OperatorMatrix wedge_operator(const GeneratorLayout& layout, const Element& multiplier,
                                         unsigned domain_degree);

    unsigned domain_degree() const { return domain_degree_; }
    unsigned codomain_degree() const { return codomain_degree_; }
    std::size_t rows() const { return codomain_basis_.size(); }
    std::size_t cols() const { return domain_basis_.size(); }
    const std::vector<Monomial>& domain_basis() const { return domain_basis_; }
    const std::vector<Monomial>& codomain_basis() const { return codomain_basis_; }

    const Scalar& at(std::size_t row, std::size_t col) const {
        return entries_[row * cols() + col];
    }
    Scalar& at(std::size_t row, std::size_t col) { return entries_[row * cols() + col]; }

    /// Applies to a homogeneous element of the domain degree (throws
    /// otherwise; monomials outside the layout are rejected by lookup).
    Element apply(const Element& a) const;

    bool is_identity() const;

    /// {"domain_degree":.., "codomain_degree":.., "entries":[["p/q",..],..]}
    /// with rows over the codomain basis, for external audit.
    nlohmann::json to_json() const;

    friend OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);

private:
    unsigned domain_degree_;
    unsigned codomain_degree_;
    std::vector<Monomial> domain_basis_;
    std::vector<Monomial> codomain_basis_;
    std::vector<Scalar> entries_;  // row-major, rows = codomain
};

/// Exact Gauss-Jordan inverse; nullopt when singular. The inverse swaps
/// domain and codomain.
std::optional<OperatorMatrix> exact_inverse(const OperatorMatrix& m);

/// The model hyperplane class L = sum_sigma zeta^sigma w_sigma w_{c sigma}
/// together with the exact operator calculus built on it: powers of L, the
/// hard-Lefschetz inverses theta_i, and the lowering operator Lambda.
///
/// theta matrices are built once per degree and cached behind a write-once
/// table; all queries after construction are safe to share across threads.
class LefschetzClass {
public:
    /// zeta must be skew (zeta^{c sigma} = -zeta^sigma). Zero components are
    /// accepted and reported as degeneracy.
    LefschetzClass(CMConfig config, EigenvalueTuple zeta);

    /// zeta = 1 on Sigma (the normalization used for certification).
    static LefschetzClass standard(CMConfig config);

    const CMConfig& config() const { return config_; }
    const GeneratorLayout& layout() const { return config_.layout(); }
    const EigenvalueTuple& zeta() const { return zeta_; }
    const Element& element() const { return element_; }

    bool is_degenerate() const;
    std::vector<GeneratorIndex> degenerate_generators() const;

    /// The (sigma, c sigma) component zeta^sigma w_sigma w_{c sigma};
    /// requires sigma unbarred.
    Element component(const GeneratorIndex& sigma) const;

    /// prod_{sigma in K} component(sigma) for an unbarred bit set K.
    Element component_product(std::uint64_t k_mask) const;

    Element l_power(unsigned n) const;
    Element l_power_apply(const Element& a, unsigned n) const;

    /// Matrix of L^{g-i}: H^i -> H^{2g-i} for 0 <= i <= g.
    OperatorMatrix lefschetz_power_matrix(unsigned i) const;

    /// Exact inverse theta_i: H^{2g-i} -> H^i of the above; throws
    /// HardLefschetzError when singular.
    std::shared_ptr<const OperatorMatrix> theta(unsigned i) const;

    /// Lambda on a homogeneous degree-i element, 2 <= i <= 2g:
    /// theta_{i-2} after L^{g-i+1} for i <= g, and L^{i-1-g} after
    /// theta_{2g-i} above the middle degree.
    Element lambda_apply(const Element& a, unsigned i) const;

    /// True iff L^{g-i+1} ^ a = 0; requires i <= g.
    bool is_primitive(const Element& a, unsigned i) const;

    /// The types carrying a nonzero component of Lambda w_t; requires
    /// weight(t) >= 2.
    std::set<CycleType> lambda_type_support(const CycleType& t) const;

private:
    Element l_power_unlocked(unsigned n) const;  // cache_mutex_ must be held

    CMConfig config_;
    EigenvalueTuple zeta_;
    Element element_;
    mutable std::mutex cache_mutex_;
    mutable std::map<unsigned, std::shared_ptr<const OperatorMatrix>> theta_cache_;
    mutable std::map<unsigned, Element> power_cache_;
};

}  // namespace cmlef
