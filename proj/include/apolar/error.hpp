#ifndef APOLAR_ERROR_HPP
#define APOLAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace apolar {

/// Domain failure: the inputs are well formed but the requested computation
/// does not apply to them (wrong base algebra, failed precondition, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scalars or matrices drawn from two different fields were combined.
class FieldMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed input text (term syntax, problem files, command line).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace apolar

#endif
