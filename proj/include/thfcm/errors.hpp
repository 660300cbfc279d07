#pragma once

#include <stdexcept>

namespace thfcm {

// Base class for all failures raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidImage final : public Error {
 public:
  using Error::Error;
};

// Smoothing window is even.
class EvenWindow final : public Error {
 public:
  using Error::Error;
};

// Smoothing window outside [1, 255].
class WindowOutOfRange final : public Error {
 public:
  using Error::Error;
};

// A clustering or pipeline knob violates its constraint.
class InvalidConfig final : public Error {
 public:
  using Error::Error;
};

// Fewer data points than clusters.
class InsufficientData final : public Error {
 public:
  using Error::Error;
};

class NonFiniteInput final : public Error {
 public:
  using Error::Error;
};

// Image with a single distinct gray value; histogram clustering carries no
// segmentation information for it.
class DegenerateImage final : public Error {
 public:
  using Error::Error;
};

// Base for PGM decode failures.
class PgmError : public Error {
 public:
  using Error::Error;
};

class MalformedHeader final : public PgmError {
 public:
  using PgmError::PgmError;
};

class TruncatedData final : public PgmError {
 public:
  using PgmError::PgmError;
};

class UnsupportedMaxval final : public PgmError {
 public:
  using PgmError::PgmError;
};

// Pixel sample that cannot be represented (P2 sample out of range or not a
// number).
class MalformedData final : public PgmError {
 public:
  using PgmError::PgmError;
};

}  // namespace thfcm
