#pragma once

#include <stdexcept>
#include <string>

namespace scissors {

/// Input outside the mathematical domain of an operation (zero divisor,
/// unit where a prime is required, nonzero valuation, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operands built over different rings or fields.
class DescriptorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size bound was exceeded (trial-division bound, field size).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A map between presented modules does not respect relations.
class IllDefinedMapError : public std::runtime_error {
public:
    IllDefinedMapError(const std::string& what, std::size_t relation_index)
        : std::runtime_error(what), relation_index_(relation_index) {}

    /// Index of the first source relation whose image is not a relation.
    std::size_t relation_index() const noexcept { return relation_index_; }

private:
    std::size_t relation_index_;
};

/// Certificate search ran past its move budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Character outside the class the vanishing argument covers.
class UnsupportedCharacter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace scissors
