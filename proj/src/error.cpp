// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include "dunkl/error.hpp"

namespace dunkl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Evaluation: return "evaluation error";
    case ErrorKind::Accuracy: return "accuracy error";
    case ErrorKind::Contract: return "contract error";
    case ErrorKind::Singularity: return "singularity error";
    case ErrorKind::Capability: return "capability error";
    case ErrorKind::Construction: return "construction error";
    case ErrorKind::Argument: return "argument error";
  }
  return "error";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace dunkl
