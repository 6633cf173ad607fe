#include "qfw/report.hpp"

namespace qfw {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  for (auto& n : other.notes) notes.push_back(n);
}

Verdict Report::all_yes(const std::vector<Verdict>& vs) {
  for (auto v : vs)
    if (v != Verdict::Yes) return Verdict::No;
  return Verdict::Yes;
}

json Report::to_json(std::uint64_t seed, const std::string& tool_version) const {
  json out;
  out["verdict"] = to_string(verdict);
  json cs = json::array();
  for (auto& c : checks) {
    json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["verdict"] = to_string(c.verdict);
    if (!c.certificate.is_null()) j["certificate"] = c.certificate;
    if (!c.reason.empty()) j["reason"] = c.reason;
    cs.push_back(std::move(j));
  }
  out["checks"] = std::move(cs);
  if (!notes.empty()) out["notes"] = notes;
  out["seed"] = seed;
  out["tool_version"] = tool_version;
  return out;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(json(std::vector<Scalar>(row.begin(), row.end())));
  }
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(rows);
  return out;
}

json mats_to_json(const std::vector<Mat>& ms) {
  json out = json::array();
  for (auto& m : ms) out.push_back(mat_to_json(m));
  return out;
}

Mat mat_from_json(const json& j, Scalar p, const std::string& path) {
  auto fail = [&](const std::string& what) { throw Error(ErrorKind::Schema, path + ": " + what); };
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    fail("expected matrix object with rows, cols, entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) fail("rows/cols must be non-negative");
  std::size_t r = j["rows"], c = j["cols"];
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != r) fail("entries must have `rows` rows");
  Mat m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) fail("row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < c; ++k) {
      const json& x = e[i][k];
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= p)
        fail("entry (" + std::to_string(i) + "," + std::to_string(k) + ") is not in [0, p)");
      m(i, k) = x.get<Scalar>();
    }
  }
  return m;
}

}  // namespace qfw
