// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermipar::numerics {

/// Frozen mathematical constants used throughout the model.
/// zeta(3) is the normalization of the massless Fermi-Dirac momentum
/// distribution; zeta(4), zeta(5) enter the low-temperature expansions.
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta4 = 1.0823232337111381916;
inline constexpr double kZeta5 = 1.0369277551433699263;

/// Thrown when an integrand returns NaN or +/-inf. Carries the abscissa.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Outcome of an adaptive quadrature run.
///
/// `converged == false` means the evaluation budget was exhausted before the
/// requested tolerance was met; `value` is still the best available estimate
/// and `abs_error_estimate` bounds its error. Callers that need a guaranteed
/// tolerance must check the flag.
struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature over [0, inf).
///
/// Intended for integrands that decay at least exponentially, i.e. products
/// of powers and the Fermi factor e^{-q}/(1+e^{-q}). The semi-infinite range
/// is covered by fixed-width panels extended outward until two consecutive
/// panels contribute less than abs_tol/16 (hard cap at q = 800, far beyond
/// double-precision underflow of the Fermi factor). Panels are then bisected
/// worst-first until the summed error estimate drops below abs_tol.
///
/// Deterministic: identical inputs produce identical results; the refinement
/// order is a strict (error, position) priority.
///
/// Throws QuadratureError naming the abscissa if f returns a non-finite
/// value; throws std::invalid_argument for abs_tol <= 0 or budget < 15.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double abs_tol = 1e-12,
                                         std::int64_t budget = 1000000);

/// int_0^inf q^k / (e^q + 1) dq = (1 - 2^{-k}) k! zeta(k+1), k in {2,3,4}.
/// Throws std::invalid_argument for unsupported k.
double fermi_moment(int k);

/// Bundle of the frozen constants above plus the supported Fermi moments,
/// convenient for table-driven validation code.
struct MomentTable {
  double zeta3 = kZeta3;
  double zeta4 = kZeta4;
  double zeta5 = kZeta5;
  std::map<int, double> moment_k;  // keys 2, 3, 4

  static MomentTable make();
};

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence (accurate to
/// ~2 ulp for n <= 512). Throws std::invalid_argument for n < 1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre_rule(int n);

}  // namespace fermipar::numerics
