#pragma once

#include <stdexcept>
#include <string>

namespace knotslope {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: braid text, PD JSON, Morse event lists, pretzel lists.
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured bound (oracle crossing limit).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Degree query on the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial has no degree") {}
};

// No exact Laurent quotient exists.
class NonDivisible : public Error {
 public:
  using Error::Error;
};

// q := A^-4 substitution applied to a polynomial with an exponent not divisible by 4.
class NotDivisibleBy4 : public Error {
 public:
  using Error::Error;
};

// Operation requires a knot but the diagram has several components.
class MultiComponent : public Error {
 public:
  explicit MultiComponent(int components)
      : Error("expected a knot diagram, got " + std::to_string(components) + " components") {}
};

}  // namespace knotslope
