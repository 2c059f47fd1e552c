#pragma once

#include <stdexcept>
#include <string>

namespace df0l {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad tokens, unknown letters, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that an operation cannot accept, e.g. an erasing
/// morphism or a word outside the language.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace df0l
