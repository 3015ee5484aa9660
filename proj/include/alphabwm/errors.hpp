#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace alphabwm {

// Argument outside an operation's domain: alpha outside [0,1], zero inside a divisor, m < 2, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or invariant-violating input. field_path locates the offending
// field in the input document ("best_to_others[3]", "children.c2.worst", ...).
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field_path, const std::string& message)
        : std::runtime_error(message), field_path_(std::move(field_path)) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Consistency index requested for a system whose best-to-worst judgment is 1.
class UndefinedIndexError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace alphabwm
