#pragma once

#include <stdexcept>
#include <string>

namespace qfw {

enum class ErrorKind {
  Usage,               // contract violation by the caller (shapes, mismatched algebras)
  InvalidField,
  AssociativityViolation,
  UnitViolation,
  NotAGroup,
  NotMultiplicative,
  NotUnital,
  ModuleLaw,
  ActionsDoNotCommute,
  CharTooSmall,
  NotProjectiveAtStage,
  NotBimoduleMap,
  NotCoassociative,
  CounitFails,
  NotFgpOverBase,
  GradingViolation,
  Schema,              // malformed input document
  Internal,            // an identity that must hold by construction failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qfw
