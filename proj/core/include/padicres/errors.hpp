#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padicres {

// Raised when a divisor has no known nonzero digit.
class DivisionByUnknownZero : public std::domain_error {
 public:
  DivisionByUnknownZero() : std::domain_error("division by a ball with no known nonzero digit") {}
};

// Floating-point division by the distinguished zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class LeadingCoefficientUnknownZero : public std::domain_error {
 public:
  explicit LeadingCoefficientUnknownZero(int step = -1)
      : std::domain_error("leading coefficient of divisor has no known nonzero digit" +
                          (step >= 0 ? " (step " + std::to_string(step) + ")" : std::string{})),
        step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

class ZeroPolynomial : public std::domain_error {
 public:
  ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};

// A principal subresultant vanished (no known nonzero digit); the
// normal-case recurrence cannot continue.
class NotNormal : public std::runtime_error {
 public:
  explicit NotNormal(int j)
      : std::runtime_error("principal subresultant r_" + std::to_string(j) + " has no known nonzero digit"),
        index_(j) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

// val(r_j) reached ceil(N/2); the stabilized recurrence is not guaranteed.
class HypothesisHViolated : public std::runtime_error {
 public:
  HypothesisHViolated(int j, int64_t valuation, int64_t prec)
      : std::runtime_error("val(r_" + std::to_string(j) + ") = " + std::to_string(valuation) +
                           " >= ceil(" + std::to_string(prec) + "/2)"),
        index_(j) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class IncompleteTranscript : public std::logic_error {
 public:
  IncompleteTranscript() : std::logic_error("transcript is incomplete (the run failed)") {}
};

class DegenerateJacobian : public std::domain_error {
 public:
  explicit DegenerateJacobian(int j)
      : std::domain_error("principal subresultant r_" + std::to_string(j) + " vanishes") {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument("parse error: " + what) {}
};

}  // namespace padicres
