#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tecss {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  NotTwoEdgeConnected,
  Infeasible,
  BudgetExceeded,
  Untypeable,
  PatchNotFound,
  NotCanonical,
  Stuck,
  StructuredViolation,
  CaseLadderExhausted,
  RejectionLimit,
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

// Every library failure is an Error. `witness_vertices` carries a vertex set
// that explains the failure when one exists (for instance a subgraph that is
// contractible, which tells the reduction the leaf was not structured).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness_vertices = {},
        std::string diagnostics = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness_vertices)),
        diagnostics_(std::move(diagnostics)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<int>& witness_vertices() const { return witness_; }
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
  std::string diagnostics_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Untypeable: return "Untypeable";
    case ErrorKind::PatchNotFound: return "PatchNotFound";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::StructuredViolation: return "StructuredViolation";
    case ErrorKind::CaseLadderExhausted: return "CaseLadderExhausted";
    case ErrorKind::RejectionLimit: return "RejectionLimit";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace tecss
