#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blowup {

enum class ErrorKind {
    InvalidClass,
    AmbientMismatch,
    InvalidDims,
    InvalidIndexPair,
    NotInCone,
    NotAConeClass,
    NotEffectiveShape,
    NoCremonaRoot,
    NoTShape,
    InvalidQuery,
    UnknownClass,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidClass: return "InvalidClass";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::InvalidDims: return "InvalidDims";
        case ErrorKind::InvalidIndexPair: return "InvalidIndexPair";
        case ErrorKind::NotInCone: return "NotInCone";
        case ErrorKind::NotAConeClass: return "NotAConeClass";
        case ErrorKind::NotEffectiveShape: return "NotEffectiveShape";
        case ErrorKind::NoCremonaRoot: return "NoCremonaRoot";
        case ErrorKind::NoTShape: return "NoTShape";
        case ErrorKind::InvalidQuery: return "InvalidQuery";
        case ErrorKind::UnknownClass: return "UnknownClass";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

/// Every failure raised by the library. The kind is stable and is what the
/// CLI reports in its JSON error document.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace blowup
