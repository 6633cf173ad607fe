#include "qfw/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>

#include "qfw/verify.hpp"

namespace qfw {

namespace {

const char* kTrivial = "TRIVIAL";
const char* kDerived = "DERIVED";

std::string verdict_name(Verdict v) { return to_string(v); }

Verdict verdict_from(const std::string& s) {
  if (s == "yes") return Verdict::Yes;
  if (s == "no") return Verdict::No;
  if (s == "vacuous") return Verdict::Vacuous;
  if (s == "inconsistent") return Verdict::Inconsistent;
  throw Error(ErrorKind::Schema, "/expected: unknown verdict '" + s + "'");
}

struct Named {
  std::string name;
  Algebra algebra;
};

std::vector<Named> algebras(PrimeField f) {
  return {{"field", field_algebra(f)},
          {"c2", group_algebra(f, cyclic_group_table(2))},
          {"c3", group_algebra(f, cyclic_group_table(3))},
          {"x2", truncated_polynomial(f, 2)},
          {"m2", matrix_algebra(f, 2)},
          {"ff", direct_product(field_algebra(f), field_algebra(f))},
          {"t2", upper_triangular(f, 2)}};
}

struct NamedExt {
  std::string name;
  AlgebraHom hom;
  Verdict expected;
  std::string provenance, oracle;
};

std::vector<NamedExt> extensions(PrimeField f) {
  std::string pre = "f" + std::to_string(f.p()) + "_";
  std::vector<NamedExt> out;
  for (auto& a : algebras(f)) {
    if (a.name == "field") continue;
    bool t2 = a.name == "t2";
    out.push_back({pre + "to_" + a.name, unit_embedding(a.algebra), t2 ? Verdict::No : Verdict::Yes, kDerived,
                   t2 ? "T2 is not self-injective: the projective-injective summands of T2 and its dual differ "
                        "(add-approximation oracle)"
                      : "Frobenius algebra over the base field: trace or group form gives a dual basis; "
                        "add-approximation oracle agrees"});
  }
  auto x2 = truncated_polynomial(f, 2);
  out.push_back({pre + "x2_to_field", AlgebraHom::make(x2, field_algebra(f), Mat(1, 2, f.p(), {1, 0})), Verdict::No,
                 kDerived, "exhaustive section-solvability check: the residue field is not projective over k[x]/(x^2)"});
  auto c2 = group_algebra(f, cyclic_group_table(2));
  Mat d(4, 2, f.p());
  d(0, 0) = d(2, 0) = 1;
  d(1, 1) = d(3, 1) = 1;
  out.push_back({pre + "c2_diag", AlgebraHom::make(c2, direct_product(c2, c2), d), Verdict::Yes, kDerived,
                 "S = R x R is free of rank 2 over R with the coordinate projection as Frobenius form"});
  auto ff = direct_product(field_algebra(f), field_algebra(f));
  Mat dm(4, 2, f.p());
  dm(0, 0) = dm(3, 1) = 1;
  out.push_back({pre + "ff_to_m2", AlgebraHom::make(ff, matrix_algebra(f, 2), dm), Verdict::Yes, kDerived,
                 "diagonal part of a matrix is a Frobenius form with dual bases e_ij, e_ji"});
  return out;
}

// A = k[x]/(x^2), C = A + k t, t killed by x on both sides.
Coring non_projective_coring(PrimeField f) {
  Scalar p = f.p();
  auto a = truncated_polynomial(f, 2);
  Mat one = Mat::identity(3, p);
  Mat x(3, 3, p);
  x(1, 0) = 1;
  auto c = Bimodule::make(a, a, {one, x}, {one, x});
  auto sq = tensor_over(a, c, c);
  Mat raw(9, 3, p);
  raw(0, 0) = raw(3, 1) = raw(6, 2) = raw(2, 2) = 1;
  Mat eps(2, 3, p);
  eps(0, 0) = eps(1, 1) = 1;
  return make_coring(c, sq.projection * raw, eps);
}

GradedRing graded_t2(PrimeField f) {
  auto t2 = upper_triangular(f, 2);
  std::vector<std::size_t> deg(3);
  for (std::size_t i = 0; i < 3; ++i) deg[i] = vec_is_zero(t2.basis_product(i, i)) ? 1 : 0;
  return GradedRing::from_algebra(t2, cyclic_group_table(2), deg);
}

// One-dimensional T2-module through the character picking idempotent basis vector j.
LeftModule t2_character(const Algebra& t2, std::size_t j) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < t2.dim(); ++i) act.push_back(Mat(1, 1, t2.p(), {Scalar(i == j ? 1 : 0)}));
  return LeftModule::make(t2, 1, act);
}

json doc(Scalar p, const char* key, json body) { return input_document(p, key, std::move(body)); }

void add_modules(std::vector<Fixture>& out, PrimeField f) {
  Scalar p = f.p();
  std::string pre = "f" + std::to_string(p) + "_";
  auto t2 = upper_triangular(f, 2);
  // The idempotent e with e n != 0 for the nilpotent n spans a projective simple.
  std::size_t nil = 0, proj = 0, top = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (vec_is_zero(t2.basis_product(i, i))) nil = i;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != nil) (vec_is_zero(t2.basis_product(i, nil)) ? top : proj) = i;
  auto reg = regular_left(t2);
  auto sp = t2_character(t2, proj), st = t2_character(t2, top);
  auto m = [&](const LeftModule& x) { return doc(p, "module", module_to_json(x)); };
  std::string kr = "oracle: exhaustive split-map enumeration over Hom(M, N^n)";
  out.push_back({pre + "t2_projective_simple_divides_regular", "divides", {m(sp), m(reg)}, Verdict::Yes, kDerived, kr});
  out.push_back({pre + "t2_top_simple_divides_regular", "divides", {m(st), m(reg)}, Verdict::No, kDerived, kr});
  out.push_back({pre + "t2_regular_similar_regular_plus_simple", "similar", {m(reg), m(direct_sum(reg, sp))},
                 Verdict::Yes, kDerived, kr});
  out.push_back({pre + "t2_simple_similar_regular", "similar", {m(sp), m(reg)}, Verdict::No, kDerived, kr});
  auto x2 = truncated_polynomial(f, 2);
  auto k = LeftModule::make(x2, 1, {Mat(1, 1, p, {1}), Mat(1, 1, p, {0})});
  auto rx = regular_left(x2);
  out.push_back({pre + "x2_residue_divides_regular", "divides", {m(k), m(rx)}, Verdict::No, kDerived, kr});
  out.push_back({pre + "x2_regular_similar_square", "similar", {m(rx), m(direct_sum(rx, rx))}, Verdict::Yes,
                 kTrivial, "M divides M + M and M + M divides M^2"});
  out.push_back({pre + "t2_decompose_regular", "decompose", {m(reg)}, Verdict::Yes, kTrivial,
                 "the decomposition maps recombine to the identity"});
}

}  // namespace

std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  for (Scalar p : {5u, 7u, 11u}) {
    PrimeField f(p);
    std::string pre = "f" + std::to_string(p) + "_";
    auto exts = extensions(f);
    for (auto& e : exts)
      out.push_back({e.name, "check-extension", {doc(p, "hom", hom_to_json(e.hom))}, e.expected, e.provenance, e.oracle});

    for (auto& a : algebras(f))
      out.push_back({pre + "trivial_" + a.name, "check-coring", {doc(p, "coring", coring_to_json(trivial_coring(a.algebra)))},
                     Verdict::Yes, kTrivial, "A is f.g. projective over itself and *A = A"});
    for (auto& e : exts) {
      auto c = sweedler(make_extension(e.hom));
      bool yes = e.expected == Verdict::Yes || e.name == pre + "x2_to_field";
      std::string oracle = e.expected == Verdict::Yes
                               ? "Sweedler coring of a quasi-Frobenius extension"
                               : (yes ? "S (x)_R S is the residue field: the trivial coring over k"
                                      : "*C = End(S) and C ~ *C reduces to S ~ Hom(S, k) over T2, which fails");
      out.push_back({pre + "sweedler_" + e.name.substr(pre.size()), "check-coring",
                     {doc(p, "coring", coring_to_json(c))}, yes ? Verdict::Yes : Verdict::No,
                     e.name == pre + "x2_to_field" ? kTrivial : kDerived, oracle});
    }
    out.push_back({pre + "coring_not_projective", "check-coring", {doc(p, "coring", coring_to_json(non_projective_coring(f)))},
                   Verdict::No, kDerived, "the summand k of _A C is not projective over k[x]/(x^2)"});

    auto c2 = cyclic_group_table(2);
    out.push_back({pre + "graded_c2", "check-graded",
                   {doc(p, "graded", graded_to_json(GradedRing::from_algebra(group_algebra(f, c2), c2, {0, 1})))},
                   Verdict::Yes, kDerived, "group algebra is Frobenius; both components are free over R_e"});
    out.push_back({pre + "graded_t2", "check-graded", {doc(p, "graded", graded_to_json(graded_t2(f)))}, Verdict::No,
                   kDerived, "oracle: add-approximation of R and Coind(R_e) over the 12-dimensional enveloping algebra"});

    for (auto& a : algebras(f)) {
      if (a.name == "field" || a.name == "m2") continue;
      out.push_back({pre + "regular_" + a.name, "check-bimodule", {doc(p, "bimodule", bimodule_to_json(regular_bimodule(a.algebra)))},
                     Verdict::Yes, kTrivial, "both duals of the regular bimodule are the regular bimodule"});
    }
    auto t2 = upper_triangular(f, 2);
    std::vector<Mat> ra;
    for (std::size_t i = 0; i < 3; ++i) ra.push_back(t2.right_mult_basis(i));
    auto kt = Bimodule::make(field_algebra(f), t2, {Mat::identity(3, p)}, ra);
    out.push_back({pre + "field_t2", "check-bimodule", {doc(p, "bimodule", bimodule_to_json(kt))}, Verdict::No, kDerived,
                   "duals are T2 and its k-dual as (T2,k)-bimodules, which have different indecomposables"});
    out.push_back({pre + "dual_sequence_c2", "dual-sequence",
                   {doc(p, "bimodule", bimodule_to_json(regular_bimodule(group_algebra(f, c2))))}, Verdict::Yes,
                   kTrivial, "every dual of a regular bimodule is regular"});
    add_modules(out, f);
    if (auto a = nakayama_inflation(f, {{2, 2}, {2, 1}}))
      out.push_back({pre + "qf_not_frobenius", "check-bimodule",
                     {doc(p, "bimodule", bimodule_to_json(make_extension(unit_embedding(*a)).rs))},
                     Verdict::Yes, kDerived,
                     "found by search_qf_not_frobenius: Nakayama algebra with Kupisch series (2,2) inflated by "
                     "multiplicities (2,1); self-injective, and no linear form has a nondegenerate Gram matrix "
                     "(exhaustive over all forms)"});
  }
  return out;
}

void export_corpus(const std::vector<Fixture>& fixtures, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["version"] = 1;
  json items = json::array();
  for (auto& fx : fixtures) {
    json files = json::array();
    for (std::size_t k = 0; k < fx.inputs.size(); ++k) {
      std::string file = fx.inputs.size() == 1 ? fx.name + ".json" : fx.name + "." + std::to_string(k) + ".json";
      std::ofstream(dir / file) << fx.inputs[k].dump() << "\n";
      files.push_back(file);
    }
    json j;
    j["name"] = fx.name;
    j["command"] = fx.command;
    j["inputs"] = std::move(files);
    j["expected"] = verdict_name(fx.expected);
    j["provenance"] = fx.provenance;
    j["oracle"] = fx.oracle;
    items.push_back(std::move(j));
  }
  manifest["fixtures"] = std::move(items);
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
}

std::vector<Fixture> load_corpus(const std::filesystem::path& dir) {
  auto read = [](const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::Usage, "cannot read " + file.string());
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::Schema, file.string() + ": malformed JSON: " + e.what());
    }
  };
  json manifest = read(dir / "manifest.json");
  if (!manifest.contains("fixtures") || !manifest["fixtures"].is_array())
    throw Error(ErrorKind::Schema, "/fixtures: expected an array");
  std::vector<Fixture> out;
  for (std::size_t i = 0; i < manifest["fixtures"].size(); ++i) {
    const json& j = manifest["fixtures"][i];
    std::string path = "/fixtures/" + std::to_string(i);
    for (const char* key : {"name", "command", "inputs", "expected"})
      if (!j.contains(key)) throw Error(ErrorKind::Schema, path + "/" + key + ": required field is missing");
    Fixture fx;
    fx.name = j["name"];
    fx.command = j["command"];
    fx.expected = verdict_from(j["expected"]);
    fx.provenance = j.value("provenance", "");
    fx.oracle = j.value("oracle", "");
    for (auto& file : j["inputs"]) fx.inputs.push_back(read(dir / file.get<std::string>()));
    out.push_back(std::move(fx));
  }
  return out;
}

std::vector<BatteryItem> battery(const std::vector<Fixture>& fixtures, std::uint64_t seed) {
  std::vector<BatteryItem> out;
  for (auto& fx : fixtures) {
    BatteryItem item;
    item.name = fx.name;
    item.expected = fx.expected;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto r = run_command(fx.command, fx.inputs, {seed, 2});
      item.report = result_to_json(r, seed);
      item.got = r.report.verdict;
      auto v = verify::report(item.report);
      item.certificates_ok = v.ok;
      item.certificates = v.certificates;
      if (!v.ok) item.error = v.failures.front();
    } catch (const std::exception& e) {
      item.error = e.what();
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(item));
  }
  return out;
}

json battery_to_json(const std::vector<BatteryItem>& items, std::uint64_t seed) {
  json reports = json::array();
  std::size_t passed = 0;
  for (auto& it : items) {
    json j;
    j["name"] = it.name;
    j["expected"] = verdict_name(it.expected);
    j["got"] = it.got ? verdict_name(*it.got) : "error";
    j["pass"] = it.pass();
    j["certificates"] = it.certificates;
    if (!it.error.empty()) j["error"] = it.error;
    if (!it.report.is_null()) j["report"] = it.report;
    reports.push_back(std::move(j));
    passed += it.pass();
  }
  json out;
  out["passed"] = passed;
  out["total"] = items.size();
  out["seed"] = seed;
  out["tool_version"] = kToolVersion;
  out["reports"] = std::move(reports);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Algebra> nakayama_inflation(PrimeField f, const NakayamaCandidate& c) {
  std::size_t n = c.kupisch.size();
  if (n == 0 || c.multiplicity.size() != n) return std::nullopt;
  // Paths (start, length) of the basic algebra.
  struct Path {
    std::size_t start, length;
  };
  std::vector<Path> paths;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.kupisch[i] == 0 || c.kupisch[(i + 1) % n] + 1 < c.kupisch[i]) return std::nullopt;
    for (std::size_t l = 0; l < c.kupisch[i]; ++l) paths.push_back({i, l});
  }
  auto end = [&](const Path& q) { return (q.start + q.length) % n; };
  auto find = [&](std::size_t s, std::size_t l) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < paths.size(); ++k)
      if (paths[k].start == s && paths[k].length == l) return k;
    return std::nullopt;
  };
  std::vector<std::size_t> vertex;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < c.multiplicity[i]; ++m) vertex.push_back(i);
  struct Elem {
    std::size_t s, t, path;
  };
  std::vector<Elem> basis;
  for (std::size_t s = 0; s < vertex.size(); ++s)
    for (std::size_t t = 0; t < vertex.size(); ++t)
      for (std::size_t k = 0; k < paths.size(); ++k)
        if (paths[k].start == vertex[s] && end(paths[k]) == vertex[t]) basis.push_back({s, t, k});
  std::size_t d = basis.size();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[{basis[i].s, basis[i].t, basis[i].path}] = i;
  std::vector<Scalar> sc(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto &a = basis[i], &b = basis[j];
      if (a.t != b.s) continue;
      const Path &pa = paths[a.path], &pb = paths[b.path];
      if (pa.length + pb.length >= c.kupisch[pa.start]) continue;
      auto k = find(pa.start, pa.length + pb.length);
      if (!k) continue;
      sc[(i * d + j) * d + index.at({a.s, b.t, *k})] = 1;
    }
  Vec unit(d, 0);
  for (std::size_t s = 0; s < vertex.size(); ++s) unit[index.at({s, s, *find(vertex[s], 0)})] = 1;
  try {
    return Algebra::make(f, d, std::move(sc), std::move(unit));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<QfSearchHit> search_qf_not_frobenius(PrimeField f, std::size_t max_vertices, std::size_t max_length,
                                                   std::size_t max_mult, std::size_t max_dim, Rng& rng) {
  std::vector<std::pair<std::size_t, NakayamaCandidate>> cands;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::size_t> kup(n, 1);
    for (;;) {
      std::vector<std::size_t> mult(n, 1);
      for (;;) {
        NakayamaCandidate c{kup, mult};
        // Dimension: sum over slot pairs of paths between their vertices.
        std::size_t dim = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t l = 0; l < kup[i]; ++l) dim += mult[i] * mult[(i + l) % n];
        if (dim <= max_dim) cands.push_back({dim, c});
        std::size_t k = 0;
        while (k < n && ++mult[k] > max_mult) mult[k++] = 1;
        if (k == n) break;
      }
      std::size_t k = 0;
      while (k < n && ++kup[k] > max_length) kup[k++] = 1;
      if (k == n) break;
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [dim, c] : cands) {
    auto a = nakayama_inflation(f, c);
    if (!a) continue;
    auto e = make_extension(unit_embedding(*a));
    if (is_qf_extension(e, rng).verdict != Verdict::Yes) continue;
    if (is_frobenius_extension(e, rng).verdict == Verdict::Yes) continue;
    return QfSearchHit{c, *a};
  }
  return std::nullopt;
}

}  // namespace qfw
