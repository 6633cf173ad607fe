#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qfw/matrix.hpp"

namespace qfw {

using json = nlohmann::ordered_json;

enum class Verdict { Yes, No, Vacuous, Inconsistent };
std::string to_string(Verdict v);

/// One named sub-decision. `certificate` is null when the check carries a
/// reason instead.
struct Check {
  std::string name;
  std::string anchor;
  Verdict verdict = Verdict::Yes;
  json certificate;
  std::string reason;
};

struct Report {
  Verdict verdict = Verdict::Yes;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void add(Check c) { checks.push_back(std::move(c)); }
  /// Copies every check of `other`, prefixing names with `prefix`.
  void absorb(const Report& other, const std::string& prefix);
  /// Yes when all listed checks are yes, otherwise No.
  static Verdict all_yes(const std::vector<Verdict>& vs);
  json to_json(std::uint64_t seed, const std::string& tool_version) const;
};

json mat_to_json(const Mat& m);
json mats_to_json(const std::vector<Mat>& ms);
/// Throws Error(Schema) on malformed input.
Mat mat_from_json(const json& j, Scalar p, const std::string& path);

}  // namespace qfw
