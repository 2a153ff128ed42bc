#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpath {

// Numeric values of the first four are the CLI exit codes.
enum class ErrorCode {
    Parse = 1,
    Coherence = 2,
    Fuel = 3,
    Uninhabited = 4,
    Position = 5,
    Precondition = 6,
    Contract = 7,
    NonCanonical = 8,
};

const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

   private:
    ErrorCode code_;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorCode::Parse, format(message, line, column)),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    static std::string format(const std::string& message, std::size_t line,
                              std::size_t column) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Two path endpoints that were required to agree (up to alpha) do not.
class CoherenceError : public Error {
   public:
    explicit CoherenceError(const std::string& message)
        : Error(ErrorCode::Coherence, message) {}
};

class PositionError : public Error {
   public:
    explicit PositionError(const std::string& message)
        : Error(ErrorCode::Position, message) {}
};

class PreconditionError : public Error {
   public:
    explicit PreconditionError(const std::string& message)
        : Error(ErrorCode::Precondition, message) {}
};

class ContractError : public Error {
   public:
    explicit ContractError(const std::string& message)
        : Error(ErrorCode::Contract, message) {}
};

/// A premise of type `0` (the empty type) was required.
class UninhabitedError : public Error {
   public:
    explicit UninhabitedError(const std::string& message)
        : Error(ErrorCode::Uninhabited, message) {}
};

class NonCanonicalError : public Error {
   public:
    explicit NonCanonicalError(const std::string& message)
        : Error(ErrorCode::NonCanonical, message) {}
};

}  // namespace cpath
