#pragma once

#include <optional>
#include <string>

#include "qfw/coring.hpp"
#include "qfw/graded.hpp"

namespace qfw {

// Input documents: {"p": prime, "<kind>": {...}} with exactly one kind among
// algebra, hom, module, bimodule, coring, graded. Matrices are nested arrays of
// rows. Schema violations throw Schema with a JSON pointer to the offending
// value; mathematically invalid data throws the validator's own error kind.
enum class InputKind { Algebra, Hom, Module, Bimodule, Coring, Graded };
std::string to_string(InputKind k);

struct Input {
  InputKind kind;
  Scalar p = 0;
  std::optional<Algebra> algebra;
  std::optional<AlgebraHom> hom;
  std::optional<LeftModule> module;
  std::optional<Bimodule> bimodule;
  std::optional<Coring> coring;
  std::optional<GradedRing> graded;
};

Input parse_input(const json& doc);
/// Parses text first; malformed JSON is a Schema error at "".
Input parse_input_text(const std::string& text);

json algebra_to_json(const Algebra& a);
json hom_to_json(const AlgebraHom& h);
json module_to_json(const LeftModule& m);
json bimodule_to_json(const Bimodule& m);
/// delta is written in raw C (x) C coordinates, index a * dim C + b.
json coring_to_json(const Coring& c);
json graded_to_json(const GradedRing& r);
/// {"p": p, key: body}
json input_document(Scalar p, const std::string& key, json body);

}  // namespace qfw
