#pragma once

// VerificationReport serialization: JSON (stable keys, decimal-string
// numbers), CSV (subjects only), and plain tables, plus certificate
// re-verification straight from the serialized evidence.

#include <json.hpp>
#include <string>

#include "lcert/harness.hpp"

namespace lcert {

nlohmann::ordered_json report_to_json(const VerificationReport& rep,
                                      bool with_timestamp = true);
std::string report_to_csv(const VerificationReport& rep);
std::string report_to_table(const VerificationReport& rep);

/// format in {json, csv, table}.
std::string render_report(const VerificationReport& rep,
                          const std::string& format,
                          bool with_timestamp = true);

/// Recompute the verdict from a serialized report alone: relation
/// certificates are re-verified against the stored subject values, with no
/// recomputation of the values themselves.  Throws CorruptEntry if a
/// certificate fails its own claim.
Verdict reverify_report(const nlohmann::ordered_json& j);

/// Parse a JSON report back into the in-memory form (subjects and
/// certificates; notes preserved).
VerificationReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace lcert
