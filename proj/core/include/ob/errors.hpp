#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ob {

// Failure codes surfaced by the library. The CLI maps any of these to
// exit status 2 (bad input / unusable request).
enum class Errc {
  InvalidInput,
  EmptySequence,
  NotInImage,
  BranchRootMismatch,
  IndexOutOfRange,
  WindowOutOfRange,
  NotInCondition,
  InvalidVecSplit,
  PreconditionViolated,
  NotPowerOfTwo,
  OracleContractViolated,
  OracleExhausted,
  BudgetExceeded,
  NotAFusionSequence,
  MismatchedTargets,
  ParseFailure,
  DuplicateLabel,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Fusion precondition failure; carries the first index where the chain breaks.
class FusionError : public Error {
 public:
  FusionError(std::size_t index, const std::string& what);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Family-spec parse failure with a 1-based text position.
class SpecError : public Error {
 public:
  SpecError(Errc code, std::size_t line, std::size_t column,
            const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ob
