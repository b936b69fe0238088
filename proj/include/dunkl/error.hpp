// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

enum class ErrorKind {
  Domain,        // argument outside the function's domain
  Evaluation,    // non-finite sample encountered
  Accuracy,      // requested tolerance not reached
  Contract,      // precondition on the modeling side violated (parity, admissibility)
  Singularity,   // Wronskian or denominator below the floor
  Capability,    // unsupported order or option
  Construction,  // built object failed its own validation
  Argument,      // malformed input (config, names)
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Quadrature that ran out of refinement depth still carries its best estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best, double est_error)
      : Error(ErrorKind::Accuracy, what), best_(best), est_error_(est_error) {}

  double best_estimate() const noexcept { return best_; }
  double estimated_error() const noexcept { return est_error_; }

 private:
  double best_;
  double est_error_;
};

// Non-finite sample; remembers where it happened.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double node)
      : Error(ErrorKind::Evaluation, what), node_(node) {}

  double node() const noexcept { return node_; }

 private:
  double node_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace dunkl
