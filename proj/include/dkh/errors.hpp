#pragma once
// Error taxonomy shared by all modules. Validation errors are caused by bad
// input and map to CLI exit code 1; invariant errors mean the library caught
// itself producing something impossible and map to exit code 2.

#include <stdexcept>
#include <string>

namespace dkh {

enum class Errc {
    // validation
    StrandCountMismatch,
    CrossingOutOfRange,
    EmptyDivide,
    SyntaxError,
    WordLengthMismatch,
    TooManyPoints,
    NotApplicable,
    // invariant violations
    DomainMismatch,
    UnsupportedSaddle,
    NotDivisible,
    GradingMismatch,
    InternalError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::StrandCountMismatch: return "StrandCountMismatch";
        case Errc::CrossingOutOfRange: return "CrossingOutOfRange";
        case Errc::EmptyDivide: return "EmptyDivide";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::WordLengthMismatch: return "WordLengthMismatch";
        case Errc::TooManyPoints: return "TooManyPoints";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::DomainMismatch: return "DomainMismatch";
        case Errc::UnsupportedSaddle: return "UnsupportedSaddle";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::GradingMismatch: return "GradingMismatch";
        case Errc::InternalError: return "InternalError";
    }
    return "?";
}

class DivideError : public std::runtime_error {
  public:
    DivideError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

    bool is_validation() const {
        switch (code_) {
            case Errc::StrandCountMismatch:
            case Errc::CrossingOutOfRange:
            case Errc::EmptyDivide:
            case Errc::SyntaxError:
            case Errc::WordLengthMismatch:
            case Errc::TooManyPoints:
            case Errc::NotApplicable: return true;
            default: return false;
        }
    }

  private:
    Errc code_;
};

class ValidationError : public DivideError {
  public:
    using DivideError::DivideError;
};

// Raised when the library's own bookkeeping is inconsistent.
class InvariantError : public DivideError {
  public:
    using DivideError::DivideError;
};

// Parse errors carry a source location.
class SyntaxError : public ValidationError {
  public:
    SyntaxError(int line, int column, const std::string& what)
        : ValidationError(Errc::SyntaxError,
                          "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_, column_;
};

}  // namespace dkh
