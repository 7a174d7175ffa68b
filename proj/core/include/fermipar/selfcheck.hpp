// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>
#include <vector>

namespace fermipar::selfcheck {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  bool quick = false;  ///< reduced grids; completes in a few seconds
  /// Perturbation added to one computed coefficient before the published-
  /// table comparison. Nonzero values are a negative control: the suite
  /// must report the seeded failure.
  double inject_fault = 0.0;
};

/// Runs the structural invariant suite: Clifford algebra, helicity-overlap
/// and angular-average identities, Fermi-Dirac normalization, published
/// table rows, asymptotics, the assembly-vs-spinor-integral cross check,
/// closed-form vs dense spectra, separability, charge conjugation and
/// mutual-information sanity. Never throws on a failed check (the failure
/// is reported in the results); propagates exceptions only for internal
/// errors such as quadrature failure.
std::vector<CheckResult> run(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace fermipar::selfcheck
