#pragma once

#include <stdexcept>
#include <string>

namespace latt {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector/matrix length does not match the ambient dimension.
class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Two values live over different label sets.
class LabelMismatch : public Error {
  public:
    explicit LabelMismatch(const std::string& what) : Error(what) {}
};

// A label is not part of the ambient label set.
class UnknownLabel : public Error {
  public:
    explicit UnknownLabel(const std::string& what) : Error(what) {}
};

// Input text could not be parsed (rational syntax, malformed structure).
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// An operation requiring a sublattice was applied to a subspace that is
// not one.  Carries a witness pair (s, t) whose two-point image generates
// the full plane.
class NotASublattice : public Error {
  public:
    NotASublattice(std::string s, std::string t)
        : Error("subspace is not a sublattice (witness pair {" + s + "," + t + "})"),
          witness_s(std::move(s)), witness_t(std::move(t)) {}

    std::string witness_s;
    std::string witness_t;
};

} // namespace latt
