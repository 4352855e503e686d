#pragma once

#include <stdexcept>
#include <string>

namespace ladderlab {

enum class ErrorCode {
  ZeroDenominator,
  PoleAtValue,
  NotDominant,
  InvalidWeight,
  LabelOutOfRange,
  NotAPermutation,
  PathMismatch,
  WeightMismatch,
  DimensionMismatch,
  InvalidPattern,
  NonUniqueSolution,
  DegenerateKappa,
  UnsupportedRank,
  InvalidInput,
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ladderlab
