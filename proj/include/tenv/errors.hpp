#pragma once

#include <stdexcept>
#include <string>

namespace tenv {

/// Distinct error kinds; the CLI maps each to its own exit code.
enum class ErrorCode : int {
    internal = 1,
    parse = 2,
    precondition = 3,
    capability = 4,
    size_guard = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }
    const char* kind() const noexcept;

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

/// Violated operation precondition: mismatched endpoints, non-canonical input, ...
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorCode::precondition, what) {}
};

class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error(ErrorCode::capability, what) {}
};

class SizeGuardError : public Error {
public:
    explicit SizeGuardError(const std::string& what) : Error(ErrorCode::size_guard, what) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

inline const char* Error::kind() const noexcept {
    switch (code_) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::capability: return "capability";
    case ErrorCode::size_guard: return "size_guard";
    case ErrorCode::internal: break;
    }
    return "internal";
}

}  // namespace tenv
