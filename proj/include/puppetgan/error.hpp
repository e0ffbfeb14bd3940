// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace puppet {

/// Failure families. The CLI maps each family to a distinct process exit code.
enum class ErrorKind {
    Config = 2,
    DataFormat = 3,
    Numerical = 4,
    Runtime = 1,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Configuration / contract errors.
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorKind::Config, w) {}
};
struct RangeError : Error {
    explicit RangeError(const std::string& w) : Error(ErrorKind::Config, w) {}
};
struct ContractError : Error {
    explicit ContractError(const std::string& w) : Error(ErrorKind::Config, w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(ErrorKind::Config, w) {}
};
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& w) : Error(ErrorKind::Config, w) {}
};
struct ShapeError : Error {
    explicit ShapeError(const std::string& w) : Error(ErrorKind::Config, w) {}
};

// Data errors.
struct FormatError : Error {
    explicit FormatError(const std::string& w) : Error(ErrorKind::DataFormat, w) {}
};
struct SchemaError : Error {
    explicit SchemaError(const std::string& w) : Error(ErrorKind::DataFormat, w) {}
};

// Numerical errors.
struct NumericalError : Error {
    explicit NumericalError(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct DegenerateRenderError : Error {
    explicit DegenerateRenderError(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct UndefinedMeasurementError : Error {
    explicit UndefinedMeasurementError(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};

// Object used before it was ready.
struct StateError : Error {
    explicit StateError(const std::string& w) : Error(ErrorKind::Runtime, w) {}
};

}  // namespace puppet
