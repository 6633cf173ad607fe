#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qfw/commands.hpp"

namespace qfw {

struct Fixture {
  std::string name;
  std::string command;
  std::vector<json> inputs;  // documents in the input schema
  Verdict expected = Verdict::Yes;
  std::string provenance;  // TRIVIAL or DERIVED
  std::string oracle;      // how the expectation was obtained
};

/// The bundled corpus over F5, F7 and F11.
std::vector<Fixture> corpus();

/// Writes every input as <dir>/<name>.json (or <name>.<k>.json for multi-input
/// fixtures) plus <dir>/manifest.json.
void export_corpus(const std::vector<Fixture>& fixtures, const std::filesystem::path& dir);
/// Reads a directory written by export_corpus.
std::vector<Fixture> load_corpus(const std::filesystem::path& dir);

struct BatteryItem {
  std::string name;
  Verdict expected = Verdict::Yes;
  std::optional<Verdict> got;  // empty when the command raised
  bool certificates_ok = false;
  std::size_t certificates = 0;
  double seconds = 0;
  std::string error;
  json report;
  bool pass() const { return got && *got == expected && certificates_ok; }
};

std::vector<BatteryItem> battery(const std::vector<Fixture>& fixtures, std::uint64_t seed);
json battery_to_json(const std::vector<BatteryItem>& items, std::uint64_t seed);

// Search for a quasi-Frobenius but not Frobenius algebra among matrix
// inflations of cyclic Nakayama algebras. Each candidate is the algebra
// End(P_1^{m_1} + ... + P_n^{m_n}) over the Nakayama algebra with Kupisch
// series c, realized as generalized matrices.
struct NakayamaCandidate {
  std::vector<std::size_t> kupisch;
  std::vector<std::size_t> multiplicity;
};
/// nullopt when the series is not admissible.
std::optional<Algebra> nakayama_inflation(PrimeField f, const NakayamaCandidate& c);

struct QfSearchHit {
  NakayamaCandidate candidate;
  Algebra algebra;
};
/// Exhaustive over n <= max_vertices vertices, Kupisch entries in [1, max_length],
/// multiplicities in [1, max_mult] and total dimension <= max_dim, in order of
/// increasing dimension. The unit embedding k -> A is tested for the
/// quasi-Frobenius and Frobenius properties.
std::optional<QfSearchHit> search_qf_not_frobenius(PrimeField f, std::size_t max_vertices, std::size_t max_length,
                                                   std::size_t max_mult, std::size_t max_dim, Rng& rng);

}  // namespace qfw
