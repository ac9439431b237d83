#ifndef RECON_ERRORS_HPP
#define RECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recon {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand lengths do not match the declared context length.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Malformed input file; message names the offending line.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Argument outside its mathematical domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Plan parameters violate the s/p constraints.
class PlanError : public Error {
public:
    explicit PlanError(const std::string& msg) : Error(msg) {}
};

/// The target rate cannot be reached even with the full shortening budget.
class InfeasibleRateError : public PlanError {
public:
    explicit InfeasibleRateError(const std::string& msg) : PlanError(msg) {}
};

/// Code construction failed (incompatible degrees, unrepairable edges).
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

} // namespace recon

#endif // RECON_ERRORS_HPP
