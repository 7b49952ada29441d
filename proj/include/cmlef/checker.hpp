#pragma once

#include <string>

#include <json.hpp>

namespace cmlef {

/// Outcome of an independent certificate check.
///
/// The checker re-parses the document and recomputes every witness trace
/// from scratch using only the exterior-algebra core (wedge products and the
/// top trace); it never calls the descent engine or the operator calculus.
enum class CheckStatus {
    Confirmed,  // every record re-verified, verdict consistent
    Mismatch,   // a record (or the verdict) disagrees with recomputation
    Malformed,  // the document does not have the certificate shape
};

struct CheckResult {
    CheckStatus status = CheckStatus::Malformed;
    /// Index of the offending record for Mismatch; -1 for document-level
    /// problems.
    int record_index = -1;
    std::string message;

    bool ok() const { return status == CheckStatus::Confirmed; }
};

CheckResult check_certificate(const nlohmann::json& doc);

/// Reads and checks a certificate file; I/O and JSON parse errors are
/// reported as Malformed.
CheckResult check_certificate_file(const std::string& path);

}  // namespace cmlef
