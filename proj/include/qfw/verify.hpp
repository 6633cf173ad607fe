#pragma once

// Certificate checking that depends on nothing but matrix arithmetic and the
// JSON document itself. Every certificate embeds the actions it talks about.

#include <json.hpp>
#include <string>
#include <vector>

namespace qfw::verify {

struct Result {
  bool ok = true;
  std::size_t certificates = 0;
  std::vector<std::string> failures;  // "<json pointer>: <reason>"
};

/// Checks one certificate of kind divides, similarity, isomorphism,
/// projective or witness. `where` prefixes failure messages.
Result certificate(const nlohmann::ordered_json& cert, const std::string& where = "");

/// Checks every certificate in a report, or in each report of a
/// {"reports": [...]} bundle.
Result report(const nlohmann::ordered_json& doc);

}  // namespace qfw::verify
