#pragma once

#include <stdexcept>
#include <string>

namespace newmac {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input or an argument outside an operation's domain:
/// unparsable rational text, zero denominator, index out of range,
/// non-squarefree input where a squarefree one is required, and so on.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A theorem hypothesis that the inputs fail to satisfy: Condition C
/// required but violated, a required sign condition that does not hold,
/// repeated entries where distinct ones are assumed, a search that is
/// provably futile.
class HypothesisError : public Error {
public:
  explicit HypothesisError(const std::string& what) : Error(what) {}
};

} // namespace newmac
