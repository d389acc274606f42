#pragma once

#include <stdexcept>
#include <string>

namespace gk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// diagram_core
struct NonTrivalent : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct BadPairing : Error { using Error::Error; };

// relation_engine
struct DegreeOdd : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct NegativeDim : Error { using Error::Error; };

// exact_linalg
struct NoValidPrime : Error { using Error::Error; };

// clasper_pairing
struct TadpoleTest : Error { using Error::Error; };

// cli_io; both carry the 1-based source location of the offending token.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
        line(line), col(col) {}
  int line, col;
};

struct SemanticError : Error {
  SemanticError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};

struct UsageError : Error { using Error::Error; };

}  // namespace gk
