#pragma once

#include <stdexcept>
#include <string>

namespace lrorder {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input (partitions, words, permutations).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Inconsistent type triple, e.g. |beta| - |gamma| != |alpha|.
class WeightMismatch : public Error {
  public:
    using Error::Error;
};

/// Two fillings (or permutations) that must share a type do not.
class TypeMismatch : public Error {
  public:
    using Error::Error;
};

/// The skew shape lacks a property the operation needs (nested, strip, rook strip).
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// An entry assignment that is not an LR-filling of its type.
class InvalidFilling : public Error {
  public:
    using Error::Error;
};

/// Order precondition violated, e.g. Z is not below X.
class OrderError : public Error {
  public:
    using Error::Error;
};

/// A permutation argument outside the set the operation is defined on.
class PermutationError : public Error {
  public:
    using Error::Error;
};

} // namespace lrorder
