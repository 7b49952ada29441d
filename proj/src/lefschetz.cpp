#include "cmlef/lefschetz.hpp"

#include <algorithm>
#include <utility>

namespace cmlef {

OperatorMatrix::OperatorMatrix(unsigned domain_degree, unsigned codomain_degree,
                               std::vector<Monomial> domain_basis,
                               std::vector<Monomial> codomain_basis)
    : domain_degree_(domain_degree),
      codomain_degree_(codomain_degree),
      domain_basis_(std::move(domain_basis)),
      codomain_basis_(std::move(codomain_basis)),
      entries_(domain_basis_.size() * codomain_basis_.size()) {}

namespace {

std::size_t basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
        throw std::invalid_argument("OperatorMatrix: monomial outside basis");
    return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

OperatorMatrix OperatorMatrix::wedge_operator(const GeneratorLayout& layout,
                                              const Element& multiplier, unsigned domain_degree) {
    const auto p = multiplier.homogeneous_degree();
    if (!p && !multiplier.is_zero())
        throw std::invalid_argument("wedge_operator: multiplier must be homogeneous");
    const unsigned shift = p ? *p : 0;
    const unsigned codomain_degree = domain_degree + shift;
    OperatorMatrix m(domain_degree, codomain_degree, degree_basis(layout, domain_degree),
                     degree_basis(layout, codomain_degree));
    for (std::size_t col = 0; col < m.cols(); ++col) {
        const Element image = wedge(Element::term(m.domain_basis_[col], 1), multiplier);
        for (const auto& [mono, c] : image.terms())
            m.at(basis_index(m.codomain_basis_, mono), col) = c;
    }
    return m;
}

Element OperatorMatrix::apply(const Element& a) const {
    if (!a.is_homogeneous(domain_degree_))
        throw std::invalid_argument("OperatorMatrix: element not homogeneous of domain degree");
    Element out;
    for (const auto& [mono, c] : a.terms()) {
        const std::size_t col = basis_index(domain_basis_, mono);
        for (std::size_t row = 0; row < rows(); ++row) {
            const Scalar& e = at(row, col);
            if (!e.is_zero())
                out.add_term(codomain_basis_[row], e * c);
        }
    }
    return out;
}

bool OperatorMatrix::is_identity() const {
    if (rows() != cols())
        return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            if (at(r, c) != Scalar(r == c ? 1 : 0))
                return false;
    return true;
}

nlohmann::json OperatorMatrix::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (std::size_t r = 0; r < rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < cols(); ++c)
            row.push_back(at(r, c).str());
        rows_json.push_back(std::move(row));
    }
    return {{"domain_degree", domain_degree_},
            {"codomain_degree", codomain_degree_},
            {"entries", std::move(rows_json)}};
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (b.codomain_basis_ != a.domain_basis_)
        throw std::invalid_argument("multiply: operator bases do not compose");
    OperatorMatrix out(b.domain_degree_, a.codomain_degree_, b.domain_basis_, a.codomain_basis_);
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& left = a.at(r, k);
            if (left.is_zero())
                continue;
            for (std::size_t c = 0; c < out.cols(); ++c) {
                const Scalar& right = b.at(k, c);
                if (!right.is_zero())
                    out.at(r, c) += left * right;
            }
        }
    }
    return out;
}

std::optional<OperatorMatrix> exact_inverse(const OperatorMatrix& m) {
    if (m.rows() != m.cols())
        return std::nullopt;
    const std::size_t n = m.rows();
    // Work on an augmented copy [A | I]; Gauss-Jordan with exact pivots.
    std::vector<Scalar> a(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a[r * n + c] = m.at(r, c);
    OperatorMatrix inv(m.codomain_degree(), m.domain_degree(), m.codomain_basis(),
                       m.domain_basis());
    for (std::size_t r = 0; r < n; ++r)
        inv.at(r, r) = Scalar(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[pivot * n + c], a[col * n + c]);
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        const Scalar scale = a[col * n + col].inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a[col * n + c] *= scale;
            inv.at(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * n + col].is_zero())
                continue;
            const Scalar factor = a[r * n + col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r * n + c] -= factor * a[col * n + c];
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

LefschetzClass::LefschetzClass(CMConfig config, EigenvalueTuple zeta)
    : config_(std::move(config)),
      zeta_(std::move(zeta)),
      element_(riemann_form_element(zeta_, config_.layout())) {}

LefschetzClass LefschetzClass::standard(CMConfig config) {
    EigenvalueTuple zeta = EigenvalueTuple::standard_skew(config.layout());
    return LefschetzClass(std::move(config), std::move(zeta));
}

bool LefschetzClass::is_degenerate() const {
    for (unsigned r = 0; r < config_.total_genus(); ++r)
        if (zeta_.at(r).is_zero())
            return true;
    return false;
}

std::vector<GeneratorIndex> LefschetzClass::degenerate_generators() const {
    return degenerate_components(zeta_, config_.layout());
}

Element LefschetzClass::component(const GeneratorIndex& sigma) const {
    if (sigma.bar)
        throw std::invalid_argument("LefschetzClass: component index must be unbarred");
    const unsigned r = config_.layout().rank(sigma);
    const unsigned g = config_.total_genus();
    const Monomial pair((std::uint64_t{1} << r) | (std::uint64_t{1} << (r + g)));
    return Element::term(pair, zeta_.at(r));
}

Element LefschetzClass::component_product(std::uint64_t k_mask) const {
    if ((k_mask & ~config_.layout().unbarred_mask()) != 0)
        throw std::invalid_argument("LefschetzClass: component set must be unbarred");
    Element out = Element::unit();
    std::uint64_t rest = k_mask;
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        out = wedge(out, component(config_.layout().generator(r)));
        rest &= rest - 1;
    }
    return out;
}

Element LefschetzClass::l_power_unlocked(unsigned n) const {
    if (const auto it = power_cache_.find(n); it != power_cache_.end())
        return it->second;
    Element p = Element::unit();
    for (unsigned k = 1; k <= n; ++k)
        p = wedge(p, element_);
    power_cache_.emplace(n, p);
    return p;
}

Element LefschetzClass::l_power(unsigned n) const {
    std::scoped_lock lock(cache_mutex_);
    return l_power_unlocked(n);
}

Element LefschetzClass::l_power_apply(const Element& a, unsigned n) const {
    return wedge(a, l_power(n));
}

OperatorMatrix LefschetzClass::lefschetz_power_matrix(unsigned i) const {
    const unsigned g = config_.total_genus();
    if (i > g)
        throw std::invalid_argument("lefschetz_power_matrix: degree above middle dimension");
    return OperatorMatrix::wedge_operator(config_.layout(), l_power(g - i), i);
}

std::shared_ptr<const OperatorMatrix> LefschetzClass::theta(unsigned i) const {
    const unsigned g = config_.total_genus();
    if (i > g)
        throw std::invalid_argument("theta: degree above middle dimension");
    std::scoped_lock lock(cache_mutex_);
    if (const auto it = theta_cache_.find(i); it != theta_cache_.end())
        return it->second;
    const Element power = l_power_unlocked(g - i);
    auto inverse = exact_inverse(OperatorMatrix::wedge_operator(config_.layout(), power, i));
    if (!inverse) {
        std::string what = "hard Lefschetz fails in degree " + std::to_string(i);
        const auto zeros = degenerate_components(zeta_, config_.layout());
        if (!zeros.empty()) {
            what += " (vanishing components:";
            for (const auto& ix : zeros)
                what += " " + config_.layout().name(ix);
            what += ")";
        }
        throw HardLefschetzError(i, std::move(what));
    }
    auto shared = std::make_shared<const OperatorMatrix>(std::move(*inverse));
    theta_cache_.emplace(i, shared);
    return shared;
}

Element LefschetzClass::lambda_apply(const Element& a, unsigned i) const {
    const unsigned g = config_.total_genus();
    const unsigned n = 2 * g;
    if (i < 2 || i > n)
        throw std::invalid_argument("lambda_apply: degree out of range");
    if (!a.is_homogeneous(i))
        throw std::invalid_argument("lambda_apply: element not homogeneous of given degree");
    if (i <= g) {
        const Element lifted = l_power_apply(a, g - i + 1);
        return theta(i - 2)->apply(lifted);
    }
    const Element dropped = theta(n - i)->apply(a);
    return l_power_apply(dropped, i - 1 - g);
}

bool LefschetzClass::is_primitive(const Element& a, unsigned i) const {
    const unsigned g = config_.total_genus();
    if (i > g)
        throw std::invalid_argument("is_primitive: degree above middle dimension");
    if (!a.is_homogeneous(i))
        throw std::invalid_argument("is_primitive: element not homogeneous of given degree");
    return l_power_apply(a, g - i + 1).is_zero();
}

std::set<CycleType> LefschetzClass::lambda_type_support(const CycleType& t) const {
    const unsigned weight = t.weight();
    if (weight < 2)
        throw std::invalid_argument("lambda_type_support: weight must be at least 2");
    const Element image = lambda_apply(Element::term(t.monomial(), 1), weight);
    std::set<CycleType> out;
    for (const auto& [m, c] : image.terms())
        out.insert(CycleType::of(m, config_.layout()));
    return out;
}

}  // namespace cmlef
