#include "ob/errors.hpp"

namespace ob {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::NotInImage: return "NotInImage";
    case Errc::BranchRootMismatch: return "BranchRootMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::WindowOutOfRange: return "WindowOutOfRange";
    case Errc::NotInCondition: return "NotInCondition";
    case Errc::InvalidVecSplit: return "InvalidVecSplit";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::OracleContractViolated: return "OracleContractViolated";
    case Errc::OracleExhausted: return "Exhausted";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAFusionSequence: return "NotAFusionSequence";
    case Errc::MismatchedTargets: return "MismatchedTargets";
    case Errc::ParseFailure: return "ParseError";
    case Errc::DuplicateLabel: return "DuplicateLabel";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

FusionError::FusionError(std::size_t index, const std::string& what)
    : Error(Errc::NotAFusionSequence, what), index_(index) {}

SpecError::SpecError(Errc code, std::size_t line, std::size_t column,
                     const std::string& what)
    : Error(code, what), line_(line), column_(column) {}

}  // namespace ob
