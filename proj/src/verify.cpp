#include "qfw/verify.hpp"

#include <stdexcept>

#include "qfw/matrix.hpp"

namespace qfw::verify {

namespace {

using json = nlohmann::ordered_json;

struct Bad : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar modulus(const json& c) {
  if (!c.contains("p") || !c["p"].is_number_unsigned()) throw Bad("missing p");
  auto p = c["p"].get<std::uint64_t>();
  if (p < 2 || !is_prime(p)) throw Bad("p is not prime");
  return static_cast<Scalar>(p);
}

Mat matrix(const json& j, Scalar p, const char* name) {
  auto bad = [&](const std::string& w) { throw Bad(std::string(name) + ": " + w); };
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) bad("not a matrix");
  std::size_t r = j["rows"].get<std::size_t>(), c = j["cols"].get<std::size_t>();
  const json& e = j["entries"];
  if (!e.is_array() || e.size() != r) bad("row count");
  Mat m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) bad("column count");
    for (std::size_t k = 0; k < c; ++k) {
      if (!e[i][k].is_number_unsigned() || e[i][k].get<std::uint64_t>() >= p) bad("entry outside [0, p)");
      m(i, k) = e[i][k].get<Scalar>();
    }
  }
  return m;
}

std::vector<Mat> matrices(const json& j, Scalar p, const char* name) {
  if (!j.is_array()) throw Bad(std::string(name) + ": not an array");
  std::vector<Mat> out;
  for (auto& m : j) out.push_back(matrix(m, p, name));
  return out;
}

Mat repeat_diag(const Mat& a, std::size_t n) {
  Mat out(a.rows() * n, a.cols() * n, a.modulus());
  for (std::size_t k = 0; k < n; ++k) out.set_block(k * a.rows(), k * a.cols(), a);
  return out;
}

void need(bool cond, const std::string& what) {
  if (!cond) throw Bad(what);
}

// f : source -> target intertwines the two action lists.
void linear(const Mat& f, const std::vector<Mat>& src, const std::vector<Mat>& tgt, const std::string& what) {
  need(src.size() == tgt.size(), what + ": action counts differ");
  for (std::size_t i = 0; i < src.size(); ++i) {
    need(src[i].rows() == f.cols() && tgt[i].rows() == f.rows(), what + ": shape mismatch");
    need(f * src[i] == tgt[i] * f, what + " is not linear for action " + std::to_string(i));
  }
}

void divides(const json& c) {
  Scalar p = modulus(c);
  auto src = matrices(c.at("source_actions"), p, "source_actions");
  auto tgt = matrices(c.at("target_actions"), p, "target_actions");
  std::size_t n = c.at("n").get<std::size_t>();
  Mat phi = matrix(c.at("phi"), p, "phi"), psi = matrix(c.at("psi"), p, "psi");
  std::vector<Mat> tn;
  for (auto& t : tgt) tn.push_back(repeat_diag(t, n));
  linear(phi, src, tn, "phi");
  linear(psi, tn, src, "psi");
  need((psi * phi).is_identity(), "psi phi is not the identity");
}

void isomorphism(const json& c) {
  Scalar p = modulus(c);
  auto src = matrices(c.at("source_actions"), p, "source_actions");
  auto tgt = matrices(c.at("target_actions"), p, "target_actions");
  Mat f = matrix(c.at("map"), p, "map"), g = matrix(c.at("inverse"), p, "inverse");
  linear(f, src, tgt, "map");
  need(f.rows() == f.cols() && g.rows() == f.cols() && g.cols() == f.rows(), "map is not square");
  need((f * g).is_identity() && (g * f).is_identity(), "inverse is not a two-sided inverse");
}

void projective(const json& c) {
  Scalar p = modulus(c);
  auto act = matrices(c.at("actions"), p, "actions");
  auto reg = matrices(c.at("regular"), p, "regular");
  std::size_t rank = c.at("rank").get<std::size_t>();
  Mat pi = matrix(c.at("pi"), p, "pi"), sigma = matrix(c.at("sigma"), p, "sigma");
  std::vector<Mat> free;
  for (auto& r : reg) free.push_back(repeat_diag(r, rank));
  linear(pi, free, act, "pi");
  linear(sigma, act, free, "sigma");
  need((pi * sigma).is_identity(), "pi sigma is not the identity");
}

void witness(const json& c) {
  Scalar p = modulus(c);
  Mat a = matrix(c.at("alpha"), p, "alpha"), b = matrix(c.at("alphabar"), p, "alphabar");
  need(b.cols() == a.rows(), "alpha and alphabar are not composable");
  need((b * a).is_identity(), "alphabar F(alpha) is not the identity");
}

}  // namespace

Result certificate(const json& cert, const std::string& where) {
  Result r;
  r.certificates = 1;
  try {
    if (!cert.is_object() || !cert.contains("kind") || !cert["kind"].is_string()) throw Bad("missing kind");
    std::string kind = cert["kind"];
    if (kind == "divides") {
      divides(cert);
    } else if (kind == "similarity") {
      divides(cert.at("forward"));
      divides(cert.at("backward"));
    } else if (kind == "isomorphism") {
      isomorphism(cert);
    } else if (kind == "projective") {
      projective(cert);
    } else if (kind == "witness") {
      witness(cert);
    } else {
      throw Bad("unknown certificate kind '" + kind + "'");
    }
  } catch (const Bad& e) {
    r.ok = false;
    r.failures.push_back(where + ": " + e.what());
  } catch (const json::exception& e) {
    r.ok = false;
    r.failures.push_back(where + ": malformed certificate (" + e.what() + ")");
  }
  return r;
}

Result report(const json& doc) {
  Result total;
  auto merge = [&](const Result& r) {
    total.ok = total.ok && r.ok;
    total.certificates += r.certificates;
    total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
  };
  auto one = [&](const json& rep, const std::string& base) {
    if (!rep.is_object() || !rep.contains("checks") || !rep["checks"].is_array()) {
      total.ok = false;
      total.failures.push_back(base + ": not a report");
      return;
    }
    const json& checks = rep["checks"];
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (checks[i].contains("certificate"))
        merge(certificate(checks[i]["certificate"], base + "/checks/" + std::to_string(i) + "/certificate"));
  };
  if (doc.is_object() && doc.contains("reports") && doc["reports"].is_array()) {
    for (std::size_t k = 0; k < doc["reports"].size(); ++k) {
      const json& item = doc["reports"][k];
      const json& rep = item.contains("report") ? item["report"] : item;
      one(rep, "/reports/" + std::to_string(k) + (item.contains("report") ? "/report" : ""));
    }
  } else {
    one(doc, "");
  }
  return total;
}

}  // namespace qfw::verify
