#include "qfw/io.hpp"

namespace qfw {

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::Algebra: return "algebra";
    case InputKind::Hom: return "hom";
    case InputKind::Module: return "module";
    case InputKind::Bimodule: return "bimodule";
    case InputKind::Coring: return "coring";
    case InputKind::Graded: return "graded";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Schema, (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "required field is missing");
  return *it;
}

std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar entry(const json& j, Scalar p, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= p) fail(path, "expected an integer in [0, " + std::to_string(p) + ")");
  return j.get<Scalar>();
}

Vec vec(const json& j, std::size_t n, Scalar p, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = entry(j[i], p, path + "/" + std::to_string(i));
  return v;
}

Mat mat(const json& j, std::size_t rows, std::size_t cols, Scalar p, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Mat m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec(j[r], cols, p, path + "/" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<Mat> mats(const json& j, std::size_t n, std::size_t rows, std::size_t cols, Scalar p,
                      const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of matrices");
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " matrices, found " + std::to_string(j.size()));
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(mat(j[i], rows, cols, p, path + "/" + std::to_string(i)));
  return out;
}

json rows_of(const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    out.push_back(std::vector<Scalar>(row.begin(), row.end()));
  }
  return out;
}

json rows_list(const std::vector<Mat>& ms) {
  json out = json::array();
  for (auto& m : ms) out.push_back(rows_of(m));
  return out;
}

Algebra algebra(const json& j, Scalar p, const std::string& path) {
  std::size_t n = count(field(j, "dim", path), path + "/dim");
  if (n == 0) fail(path + "/dim", "dimension must be positive");
  const json& mul = field(j, "mul", path);
  std::string mp = path + "/mul";
  if (!mul.is_array() || mul.size() != n) fail(mp, "expected an n x n x n array");
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mul[i].is_array() || mul[i].size() != n) fail(mp + "/" + std::to_string(i), "expected an n x n array");
    for (std::size_t k = 0; k < n; ++k) {
      Vec v = vec(mul[i][k], n, p, mp + "/" + std::to_string(i) + "/" + std::to_string(k));
      std::copy(v.begin(), v.end(), c.begin() + (i * n + k) * n);
    }
  }
  Vec unit = vec(field(j, "unit", path), n, p, path + "/unit");
  return Algebra::make(PrimeField(p), n, std::move(c), std::move(unit));
}

Bimodule bimodule(const json& j, Scalar p, const std::string& path) {
  auto l = algebra(field(j, "left", path), p, path + "/left");
  auto r = algebra(field(j, "right", path), p, path + "/right");
  const json& la = field(j, "left_action", path);
  if (!la.is_array() || la.empty()) fail(path + "/left_action", "expected a non-empty array of matrices");
  std::size_t d = la[0].is_array() ? la[0].size() : 0;
  return Bimodule::make(l, r, mats(la, l.dim(), d, d, p, path + "/left_action"),
                        mats(field(j, "right_action", path), r.dim(), d, d, p, path + "/right_action"));
}

}  // namespace

Input parse_input(const json& doc) {
  if (!doc.is_object()) fail("", "top level must be an object");
  const json& pj = field(doc, "p", "");
  if (!pj.is_number_unsigned()) fail("/p", "expected a prime");
  auto p64 = pj.get<std::uint64_t>();
  if (p64 < 2 || p64 > 0xffffffffULL || !is_prime(p64)) fail("/p", "expected a prime below 2^32");
  Scalar p = static_cast<Scalar>(p64);

  static const char* kinds[] = {"algebra", "hom", "module", "bimodule", "coring", "graded"};
  int found = -1;
  for (int i = 0; i < 6; ++i)
    if (doc.contains(kinds[i])) {
      if (found >= 0) fail(std::string("/") + kinds[i], "only one of algebra, hom, module, bimodule, coring, graded is allowed");
      found = i;
    }
  if (found < 0) fail("", "expected one of algebra, hom, module, bimodule, coring, graded");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "p" && it.key() != kinds[found]) fail("/" + it.key(), "unknown field");

  Input in{static_cast<InputKind>(found), p, {}, {}, {}, {}, {}, {}};
  std::string path = std::string("/") + kinds[found];
  const json& body = doc[kinds[found]];
  switch (in.kind) {
    case InputKind::Algebra:
      in.algebra = algebra(body, p, path);
      break;
    case InputKind::Hom: {
      auto s = algebra(field(body, "source", path), p, path + "/source");
      auto t = algebra(field(body, "target", path), p, path + "/target");
      in.hom = AlgebraHom::make(s, t, mat(field(body, "matrix", path), t.dim(), s.dim(), p, path + "/matrix"));
      break;
    }
    case InputKind::Module: {
      auto a = algebra(field(body, "algebra", path), p, path + "/algebra");
      std::size_t d = count(field(body, "dim", path), path + "/dim");
      in.module = LeftModule::make(a, d, mats(field(body, "action", path), a.dim(), d, d, p, path + "/action"));
      break;
    }
    case InputKind::Bimodule:
      in.bimodule = bimodule(body, p, path);
      break;
    case InputKind::Coring: {
      auto a = algebra(field(body, "base", path), p, path + "/base");
      const json& cj = field(body, "carrier", path);
      std::string cp = path + "/carrier";
      const json& la = field(cj, "left_action", cp);
      if (!la.is_array() || la.empty()) fail(cp + "/left_action", "expected a non-empty array of matrices");
      std::size_t d = la[0].is_array() ? la[0].size() : 0;
      auto c = Bimodule::make(a, a, mats(la, a.dim(), d, d, p, cp + "/left_action"),
                              mats(field(cj, "right_action", cp), a.dim(), d, d, p, cp + "/right_action"));
      Mat raw = mat(field(body, "delta", path), d * d, d, p, path + "/delta");
      Mat eps = mat(field(body, "eps", path), a.dim(), d, p, path + "/eps");
      auto sq = tensor_over(a, c, c);
      in.coring = make_coring(c, sq.projection * raw, std::move(eps));
      break;
    }
    case InputKind::Graded: {
      const json& gt = field(body, "group_table", path);
      if (!gt.is_array() || gt.empty()) fail(path + "/group_table", "expected a non-empty square array");
      std::size_t g = gt.size();
      GroupTable table(g);
      for (std::size_t x = 0; x < g; ++x) {
        std::string rp = path + "/group_table/" + std::to_string(x);
        if (!gt[x].is_array() || gt[x].size() != g) fail(rp, "expected " + std::to_string(g) + " entries");
        for (std::size_t y = 0; y < g; ++y) {
          std::size_t v = count(gt[x][y], rp + "/" + std::to_string(y));
          if (v >= g) fail(rp + "/" + std::to_string(y), "group element out of range");
          table[x].push_back(v);
        }
      }
      const json& cj = field(body, "components", path);
      if (!cj.is_array() || cj.size() != g) fail(path + "/components", "expected one dimension per group element");
      std::vector<std::size_t> dims;
      for (std::size_t x = 0; x < g; ++x) dims.push_back(count(cj[x], path + "/components/" + std::to_string(x)));
      const json& pr = field(body, "products", path);
      if (!pr.is_array() || pr.size() != g * g) fail(path + "/products", "expected |G|^2 matrices");
      validate_group(table);
      std::vector<Mat> products;
      for (std::size_t x = 0; x < g; ++x)
        for (std::size_t y = 0; y < g; ++y)
          products.push_back(mat(pr[x * g + y], dims[table[x][y]], dims[x] * dims[y], p,
                                 path + "/products/" + std::to_string(x * g + y)));
      in.graded = GradedRing::make(PrimeField(p), std::move(table), std::move(dims), std::move(products));
      break;
    }
  }
  return in;
}

Input parse_input_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  return parse_input(doc);
}

json algebra_to_json(const Algebra& a) {
  std::size_t n = a.dim();
  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(a.basis_product(i, k));
    mul.push_back(std::move(row));
  }
  json out;
  out["dim"] = n;
  out["mul"] = std::move(mul);
  out["unit"] = a.unit();
  return out;
}

json hom_to_json(const AlgebraHom& h) {
  json out;
  out["source"] = algebra_to_json(h.source());
  out["target"] = algebra_to_json(h.target());
  out["matrix"] = rows_of(h.matrix());
  return out;
}

json module_to_json(const LeftModule& m) {
  json out;
  out["algebra"] = algebra_to_json(m.algebra());
  out["dim"] = m.dim();
  out["action"] = rows_list(m.actions());
  return out;
}

json bimodule_to_json(const Bimodule& m) {
  json out;
  out["left"] = algebra_to_json(m.left_algebra());
  out["right"] = algebra_to_json(m.right_algebra());
  out["left_action"] = rows_list(m.left_actions());
  out["right_action"] = rows_list(m.right_actions());
  return out;
}

json coring_to_json(const Coring& c) {
  json carrier;
  carrier["left_action"] = rows_list(c.carrier.left_actions());
  carrier["right_action"] = rows_list(c.carrier.right_actions());
  json out;
  out["base"] = algebra_to_json(c.base);
  out["carrier"] = std::move(carrier);
  out["delta"] = rows_of(c.delta_raw());
  out["eps"] = rows_of(c.eps);
  return out;
}

json graded_to_json(const GradedRing& r) {
  std::size_t g = r.order();
  json comps = json::array(), prods = json::array();
  for (std::size_t x = 0; x < g; ++x) comps.push_back(r.component(x).size());
  const Algebra& t = r.total();
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y) {
      const auto& cx = r.component(x);
      const auto& cy = r.component(y);
      const auto& cxy = r.component(r.mul(x, y));
      Mat m(cxy.size(), cx.size() * cy.size(), t.p());
      for (std::size_t a = 0; a < cx.size(); ++a)
        for (std::size_t b = 0; b < cy.size(); ++b) {
          Vec v = t.basis_product(cx[a], cy[b]);
          for (std::size_t k = 0; k < cxy.size(); ++k) m(k, a * cy.size() + b) = v[cxy[k]];
        }
      prods.push_back(rows_of(m));
    }
  json out;
  out["group_table"] = r.group();
  out["components"] = std::move(comps);
  out["products"] = std::move(prods);
  return out;
}

json input_document(Scalar p, const std::string& key, json body) {
  json out;
  out["p"] = p;
  out[key] = std::move(body);
  return out;
}

}  // namespace qfw
