#pragma once

#include <stdexcept>
#include <string>

namespace bolkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table validation
struct NotLatin : Error { using Error::Error; };
struct NoUnit : Error { using Error::Error; };
struct UnitMismatch : Error { using Error::Error; };

// Element-level failures
struct TwoSidedInverseMissing : Error { using Error::Error; };
struct NotPowerAssociative : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };

// Permutation machinery
struct ClosureBudgetExceeded : Error { using Error::Error; };
struct NotSharplyTransitive : Error { using Error::Error; };
struct NotALineMap : Error { using Error::Error; };
struct NotAFolder : Error { using Error::Error; };

// Quandles
struct NotInvolutory : Error { using Error::Error; };

// Catalog
struct PopulationFilterViolated : Error { using Error::Error; };

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& reason)
      : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

}  // namespace bolkit
