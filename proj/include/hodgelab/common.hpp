#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hodgelab {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};
class MissingImage : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class NoIntegerSolution : public Error {
 public:
  using Error::Error;
};
class NotSerreDual : public Error {
 public:
  using Error::Error;
};
class NotInDR : public Error {
 public:
  using Error::Error;
};
class NotInHDR : public Error {
 public:
  using Error::Error;
};
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};
/// Raised when a cached basis-change matrix is not unimodular. Indicates a bug.
class InternalBasisDefect : public Error {
 public:
  using Error::Error;
};
class VerificationFailure : public Error {
 public:
  using Error::Error;
};
class UnknownName : public Error {
 public:
  using Error::Error;
};
class PartialEntry : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const Integer& v) { return v.get_str(); }

// Parses a decimal integer, optionally signed. Throws ParseError.
Integer parse_integer(const std::string& text);

}  // namespace hodgelab
