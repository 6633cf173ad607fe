#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "oracles.hpp"
#include "qfw/commands.hpp"
#include "qfw/fixtures.hpp"

using namespace qfw;

namespace {

// Some linear form lambda makes (a, b) -> lambda(ab) nondegenerate. Exhaustive over F_p^dim.
bool has_frobenius_form(const Algebra& a) {
  std::size_t n = a.dim();
  Scalar p = a.p();
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
  Vec lambda(n, 0);
  for (;;) {
    Mat g(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += std::uint64_t(lambda[k]) * prod[i * n + j][k];
        g(i, j) = static_cast<Scalar>(s % p);
      }
    if (rank(g) == n) return true;
    std::size_t k = 0;
    while (k < n && ++lambda[k] == p) lambda[k++] = 0;
    if (k == n) return false;
  }
}

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> c = corpus();
  return c;
}

}  // namespace

TEST_CASE("corpus shape") {
  std::set<std::string> names;
  std::size_t corings = 0, extensions = 0;
  for (auto& f : all()) {
    CHECK(names.insert(f.name).second);
    CHECK((f.provenance == "TRIVIAL" || f.provenance == "DERIVED"));
    CHECK_FALSE(f.oracle.empty());
    CHECK_FALSE(f.inputs.empty());
    corings += f.command == "check-coring";
    extensions += f.command == "check-extension";
  }
  CHECK(corings >= 8);
  CHECK(extensions >= 9);
  for (auto p : {"f5_", "f7_", "f11_"}) CHECK(names.count(std::string(p) + "to_c2"));
}

TEST_CASE("module fixtures agree with the independent oracles") {
  std::size_t enumerated = 0, checked = 0;
  // Enumeration when the Hom spaces are small enough, add-approximation otherwise.
  auto in_add = [&](const Rep& m, const Rep& n) {
    auto e = oracle::divides_by_enumeration(m, n);
    if (e == oracle::Enum::TooLarge) return oracle::in_add_by_approximation(m, n);
    ++enumerated;
    return e == oracle::Enum::Yes;
  };
  for (auto& f : all()) {
    if (f.command != "divides" && f.command != "similar") continue;
    auto a = parse_input(f.inputs[0]), b = parse_input(f.inputs[1]);
    auto full = [](const Input& in) { return in.module ? in.module->full_rep() : in.bimodule->full_rep(); };
    Rep m = full(a), n = full(b);
    bool expected = in_add(m, n) && (f.command == "divides" || in_add(n, m));
    CHECK_MESSAGE((f.expected == Verdict::Yes) == expected, f.name);
    ++checked;
  }
  CHECK(checked >= 12);
  CHECK(enumerated >= checked / 2);
}

TEST_CASE("extension fixtures agree with the add-approximation oracle") {
  for (auto& f : all()) {
    if (f.command != "check-extension") continue;
    auto in = parse_input(f.inputs[0]);
    auto e = make_extension(*in.hom);
    bool proj = is_fg_projective(restrict_bimodule(e.rs, Side::Left)).has_value() &&
                is_fg_projective(restrict_bimodule(e.rs, Side::Right)).has_value();
    bool qf = false;
    if (proj) {
      auto l = left_dual(e.rs).module.full_rep(), r = right_dual(e.rs).module.full_rep();
      qf = oracle::in_add_by_approximation(l, r) && oracle::in_add_by_approximation(r, l);
    }
    CHECK_MESSAGE((f.expected == Verdict::Yes) == qf, f.name);
  }
}

TEST_CASE("quasi-Frobenius but not Frobenius") {
  PrimeField f5(5);
  Rng rng(11);
  auto hit = search_qf_not_frobenius(f5, 3, 3, 2, 16, rng);
  REQUIRE(hit.has_value());
  CHECK(hit->algebra.dim() == 9);
  CHECK(hit->candidate.kupisch == std::vector<std::size_t>{2, 2});
  CHECK(hit->candidate.multiplicity == std::vector<std::size_t>{2, 1});
  // Independent of the iso search: no Frobenius form exists at all.
  CHECK_FALSE(has_frobenius_form(hit->algebra));
  // Control: the basic algebra with the same series is Frobenius.
  auto basic = nakayama_inflation(f5, {{2, 2}, {1, 1}});
  REQUIRE(basic.has_value());
  CHECK(has_frobenius_form(*basic));
  CHECK_FALSE(nakayama_inflation(f5, {{3, 1}, {1, 1}}).has_value());

  for (auto& f : all())
    if (f.name.ends_with("qf_not_frobenius")) {
      auto r = run_command(f.command, f.inputs, {1, 2}).report;
      CHECK(r.verdict == Verdict::Yes);
      CHECK(r.notes == std::vector<std::string>{"Frobenius: no"});
    }
}

TEST_CASE("export and reload") {
  auto dir = std::filesystem::temp_directory_path() / "qfw_fixture_roundtrip";
  std::filesystem::remove_all(dir);
  std::vector<Fixture> some(all().begin(), all().begin() + 12);
  export_corpus(some, dir);
  auto back = load_corpus(dir);
  REQUIRE(back.size() == some.size());
  for (std::size_t i = 0; i < some.size(); ++i) {
    CHECK(back[i].name == some[i].name);
    CHECK(back[i].expected == some[i].expected);
    CHECK(back[i].inputs == some[i].inputs);
  }
  auto items = battery(back, 1);
  for (auto& it : items) CHECK_MESSAGE(it.pass(), it.name << ": " << it.error);
  std::filesystem::remove_all(dir);
}
