#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vecinv {

enum class ErrorKind {
    Source,
    Domain,
    UnboundVariable,
    Unsupported,
    NotIntegrable,
    NotSolenoidal,
    NotConservative,
    ConstructionFailed,
    BasePointSingular,
    Validation,
    UnknownSystem,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. `residual` carries rendered
// expressions for precondition failures (divergence or curl components).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::string> residual = {})
        : std::runtime_error(message), kind_(kind), residual_(std::move(residual)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::string>& residual() const noexcept { return residual_; }

private:
    ErrorKind kind_;
    std::vector<std::string> residual_;
};

template <ErrorKind K>
class KindedError : public Error {
public:
    explicit KindedError(const std::string& message, std::vector<std::string> residual = {})
        : Error(K, message, std::move(residual)) {}
};

using DomainError = KindedError<ErrorKind::Domain>;
using UnboundVariable = KindedError<ErrorKind::UnboundVariable>;
using Unsupported = KindedError<ErrorKind::Unsupported>;
using NotSolenoidal = KindedError<ErrorKind::NotSolenoidal>;
using NotConservative = KindedError<ErrorKind::NotConservative>;
using ConstructionFailed = KindedError<ErrorKind::ConstructionFailed>;
using BasePointSingular = KindedError<ErrorKind::BasePointSingular>;
using ValidationError = KindedError<ErrorKind::Validation>;
using UnknownSystem = KindedError<ErrorKind::UnknownSystem>;

// Raised by antidifferentiation; `term` is the rendered offending term.
class NotIntegrable : public Error {
public:
    NotIntegrable(std::string term, std::string variable);

    const std::string& term() const noexcept { return term_; }
    const std::string& variable() const noexcept { return variable_; }

private:
    std::string term_;
    std::string variable_;
};

// Parse failure at byte `offset` of the input.
class SourceError : public Error {
public:
    SourceError(std::size_t offset, std::string expected, std::string found);

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string found_;
};

}  // namespace vecinv
