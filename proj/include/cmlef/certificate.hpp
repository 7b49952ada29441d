#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cmlef/ledger.hpp"

namespace cmlef {

/// Raised when certification is requested for a degenerate Lefschetz class;
/// the verdict is withheld rather than computed.
class DegenerateZetaError : public std::runtime_error {
public:
    DegenerateZetaError(std::string what, std::vector<GeneratorIndex> zeros)
        : std::runtime_error(std::move(what)), zeros_(std::move(zeros)) {}
    const std::vector<GeneratorIndex>& zero_components() const { return zeros_; }

private:
    std::vector<GeneratorIndex> zeros_;
};

/// One pairing witness: for the type (I, J) with descent data (K, I0, J0),
/// the partner (cJ0, cI0) and the complement H of K u I0 u cJ0 in Sigma give
/// a top-degree product L_H ^ w_{I,J} ^ w_{partner} whose trace must be
/// nonzero. mu is the exact scalar with w_{I,J} = mu * (L_K ^ w_{I0,J0}).
struct CertificateRecord {
    CycleType type;
    DescentData data;
    CycleType partner;
    std::uint64_t h_mask = 0;
    Scalar mu;
    Scalar trace;
    std::vector<std::string> derivation;
};

struct Certificate {
    CMConfig config;
    EigenvalueTuple zeta;
    std::vector<std::pair<CycleType, Justification>> axioms;
    std::vector<CertificateRecord> records;
    bool verdict = false;
};

/// Replays the pairing argument over every isotypic type of the
/// configuration (in canonical monomial order) and collects the witnesses.
/// Throws DegenerateZetaError when any zeta component vanishes.
Certificate certify_theorem(const LefschetzClass& lc);

/// Convenience: certify with the zeta = 1 normalization.
Certificate certify_theorem(const CMConfig& config);

nlohmann::json to_json(const Certificate& cert);

/// JSON helpers shared by the certificate format: a type is rendered as
/// {"I": [generator names], "J": [generator names]}.
nlohmann::json type_to_json(const CycleType& t, const GeneratorLayout& layout);
nlohmann::json mask_to_names(std::uint64_t mask, const GeneratorLayout& layout);

}  // namespace cmlef
