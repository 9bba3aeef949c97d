#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (tree literal, permutation word, fraction, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

// split_leaf called on an address that is absent or names an internal node.
class InvalidSplitError : public Error {
public:
    using Error::Error;
};

// A word that is not a permutation of {1..m}.
class InvalidPermutationError : public Error {
public:
    using Error::Error;
};

// Endpoint sequence that does not describe a partition of [0,1].
class InvalidPartitionError : public Error {
public:
    using Error::Error;
};

// depths() requested for a partition that is not dyadic.
class NotDyadicError : public Error {
public:
    using Error::Error;
};

// Operation undefined for the given input (e.g. shape coefficient of a
// single-node tree).
class UndefinedInputError : public Error {
public:
    using Error::Error;
};

// Model parameters outside their domain.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration refused because n exceeds the configured guard.
class ResourceGuardError : public Error {
public:
    using Error::Error;
};

// A lifting formula was requested for a model that does not satisfy the
// hypotheses it needs.
class TheoremInapplicableError : public Error {
public:
    using Error::Error;
};

// Tree pair whose two trees have different sizes.
class InvalidPairError : public Error {
public:
    using Error::Error;
};

// Argument outside the function's domain (e.g. evaluating a PL map outside
// [0,1]).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace arbor
