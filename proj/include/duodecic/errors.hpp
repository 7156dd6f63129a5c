#pragma once

#include <stdexcept>
#include <string>

namespace duodecic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input (m out of range, not 12th-power-free, reducible, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The closed-form tables have nothing to say about this (m, p).
class NotCovered : public Error {
 public:
  using Error::Error;
};

// A supplied second-order type does not make g regular.
class NotVRegular : public Error {
 public:
  using Error::Error;
};

}  // namespace duodecic
