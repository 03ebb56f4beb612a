#include "vecinv/errors.hpp"

namespace vecinv {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Source: return "SourceError";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::NotIntegrable: return "NotIntegrable";
        case ErrorKind::NotSolenoidal: return "NotSolenoidal";
        case ErrorKind::NotConservative: return "NotConservative";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::BasePointSingular: return "BasePointSingular";
        case ErrorKind::Validation: return "ValidationError";
        case ErrorKind::UnknownSystem: return "UnknownSystem";
    }
    return "Error";
}

NotIntegrable::NotIntegrable(std::string term, std::string variable)
    : Error(ErrorKind::NotIntegrable,
            "term '" + term + "' is not integrable in " + variable + " within the supported class"),
      term_(std::move(term)),
      variable_(std::move(variable)) {}

SourceError::SourceError(std::size_t offset, std::string expected, std::string found)
    : Error(ErrorKind::Source, "at offset " + std::to_string(offset) + ": expected " + expected +
                                   ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace vecinv
