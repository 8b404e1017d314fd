#pragma once

#include <stdexcept>
#include <string>

namespace s3rec {

enum class ErrorCode {
    InvalidArgument,
    InvalidGluing,
    NonInvolutiveGluing,
    SelfGluedFace,
    BadEdgeIdentification,
    NotClosed,
    NotOrientable,
    LengthMismatch,
    NotAdmissible,
    NotASphere,
    NotConnectedSurface,
    NotNormal,
    ResourceBudgetExceeded,
    Parse,
};

inline const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Malformed gluing-table text; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + msg),
          line_(line), column_(column), message_(msg) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    // The message without the position prefix.
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

inline const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::NonInvolutiveGluing: return "NonInvolutiveGluing";
    case ErrorCode::SelfGluedFace: return "SelfGluedFace";
    case ErrorCode::BadEdgeIdentification: return "BadEdgeIdentification";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::NotConnectedSurface: return "NotConnectedSurface";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace s3rec
