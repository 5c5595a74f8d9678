#pragma once

#include <stdexcept>
#include <string>

namespace subword {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (type descriptors, words, facet literals).
/// `offset` is the 0-based character offset of the offending token, or -1.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int offset = -1)
      : Error(offset >= 0 ? what + " (at offset " + std::to_string(offset) + ")" : what),
        offset_(offset) {}
  int offset() const noexcept { return offset_; }

 private:
  int offset_;
};

/// A Coxeter type outside the supported crystallographic families.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// The target element has no reduced expression inside the word.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (facets, group order, faces) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural invariant that must hold mathematically was violated.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace subword
