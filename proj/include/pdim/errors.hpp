#pragma once
#include <stdexcept>
#include <string>

namespace pdim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// generic contract violation (bad argument, broken precondition)
struct InvalidArgument : Error { using Error::Error; };

struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error("parse error at line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct UnknownVertex : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct OddCycle : Error { using Error::Error; };
struct NotAForest : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };
struct PropertyViolation : Error { using Error::Error; };
struct PaletteTooSmall : Error { using Error::Error; };
struct RetriesExhausted : Error { using Error::Error; };
struct NonInjectiveMapping : Error { using Error::Error; };
struct TargetsClashInCoordinate : Error { using Error::Error; };
struct SharedVertexMissing : Error { using Error::Error; };
struct IntersectionNotSingleton : Error { using Error::Error; };
struct PieceNotWellBegun : Error { using Error::Error; };
struct PiecesDisagreeOnS : Error { using Error::Error; };
struct InvalidPieceEncoding : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };

}  // namespace pdim
