#pragma once

#include <stdexcept>
#include <string>

namespace fanning {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes, base times or sizes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be inverted is singular or too badly conditioned.
class IllConditionedError : public Error {
 public:
  IllConditionedError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// The juxtaposed matrix (A|A'|...|A^(k-1)) is not invertible at the requested time.
class NotFanningError : public IllConditionedError {
 public:
  NotFanningError(const std::string& what, double condition, double time)
      : IllConditionedError(what, condition), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// The jet does not carry enough derivatives for the requested quantity.
class InsufficientOrderError : public Error {
 public:
  InsufficientOrderError(const std::string& what, int required, int available)
      : Error(what + " (requires jet order " + std::to_string(required) +
              ", have " + std::to_string(available) + ")"),
        required_(required),
        available_(available) {}
  int required() const noexcept { return required_; }
  int available() const noexcept { return available_; }

 private:
  int required_;
  int available_;
};

/// An operation that is only valid for normal frames (P1 = 0) received another frame.
class NotNormalError : public Error {
 public:
  NotNormalError(const std::string& what, double defect) : Error(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// The adaptive integrator could not reach the requested time.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Malformed curve file or command-line argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fanning
