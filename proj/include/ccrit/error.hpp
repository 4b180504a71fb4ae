#pragma once

#include <stdexcept>
#include <string>

namespace ccrit {

enum class ErrorCode {
    InvalidEdge,
    DuplicateEdge,
    MissingEdge,
    IncompleteWeighting,
    NotPlanar,
    CorruptRotation,
    NotTwoConnected,
    AnchorAmbiguous,
    GNotNonplanar,
    BalanceFailed,
    DegenerateAnchors,
    ClaimProofMismatch,
    FinalCheckFailed,
    BalancednessViolated,
    MalformedDrawing,
    CertificationFailed,
    ParseError,
    SchemaError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::IncompleteWeighting: return "IncompleteWeighting";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::CorruptRotation: return "CorruptRotation";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::AnchorAmbiguous: return "AnchorAmbiguous";
        case ErrorCode::GNotNonplanar: return "GNotNonplanar";
        case ErrorCode::BalanceFailed: return "BalanceFailed";
        case ErrorCode::DegenerateAnchors: return "DegenerateAnchors";
        case ErrorCode::ClaimProofMismatch: return "ClaimProofMismatch";
        case ErrorCode::FinalCheckFailed: return "FinalCheckFailed";
        case ErrorCode::BalancednessViolated: return "BalancednessViolated";
        case ErrorCode::MalformedDrawing: return "MalformedDrawing";
        case ErrorCode::CertificationFailed: return "CertificationFailed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// Parse failures carry a position; schema failures carry the offending field.
class ParseError : public Error {
  public:
    ParseError(int line, int column, const std::string& message)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

class SchemaError : public Error {
  public:
    SchemaError(const std::string& field, const std::string& message)
        : Error(ErrorCode::SchemaError, field + ": " + message), field_(field) {}

    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

}  // namespace ccrit
