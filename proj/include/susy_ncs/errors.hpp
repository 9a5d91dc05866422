// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace susy {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series or iteration did not converge within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state does not fit in the requested Fock truncation.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares eigenvector oracle found no null vector.
class NoEigenvectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction requested for a K-matrix of the wrong family.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace susy
