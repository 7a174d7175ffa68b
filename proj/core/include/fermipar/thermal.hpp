// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>

namespace fermipar::thermal {

/// Thermal weights of the parity-helicity state at reduced temperature
/// t_m = T/m: m_pp multiplies the dominant parity sector, m_mm the opposite
/// one, m_pm the parity-coherence corner. Invariants: all in [0, 1],
/// m_pp + m_mm == 1, m_pm^2 <= m_pp * m_mm is NOT required (m_pm is a
/// first-moment average, bounded by 1/2 at large t_m).
struct ThermalCoefficients {
  double m_pp = 0.0;
  double m_mm = 0.0;
  double m_pm = 0.0;
};

/// Unit-normalized momentum distribution of a massless Fermi-Dirac gas in
/// reduced momentum q = p/T:  (2 / 3 zeta(3)) q^2 / (e^q + 1).
/// int_0^inf pdf = 1. Throws std::invalid_argument for q < 0.
double fermi_dirac_pdf(double q);

/// 1 - 1/sqrt(1 + x) evaluated without cancellation,
/// x / (sqrt(1+x) (1 + sqrt(1+x))), accurate to one ulp for x down to
/// 1e-300 and correct (-> 1) for arbitrarily large x.
/// Throws std::invalid_argument for x <= -1.
double stable_defect(double x);

/// Thermal coefficients at reduced temperature t_m for branch s in {0, 1}.
///
/// With E = m sqrt(1 + t^2 q^2) at reduced momentum q = p/T, the three
/// Fermi-Dirac averages for the dominant branch (s = 1) are
///   m_pp = < (E + m) / 2E >,   m_mm = < (E - m) / 2E >,   m_pm = < p / 2E >,
/// each computed by its own adaptive quadrature (m_mm is not obtained by
/// subtraction). s = 0 swaps the roles of m_pp and m_mm. The mass-defect
/// integrand (E - m)/2E switches representation at t_m = 1: below, the
/// factored form t^2 q^4 / (sqrt(1+x)(1+sqrt(1+x))) keeps the absolute
/// tolerance meaningful as the value shrinks like t^2; above, the
/// unfactored stable-defect form avoids multiplying quadrature error
/// by t^2.
///
/// Throws std::invalid_argument for s outside {0, 1} or t_m <= 0 /
/// non-finite; throws std::runtime_error if any quadrature fails to
/// converge within the evaluation budget.
ThermalCoefficients coefficients(int s, double t_m, double abs_tol = 1e-13,
                                 std::int64_t budget = 1000000);

/// Leading small-t_m behavior:
///   subdominant sector  -> (15 zeta(5) / 4 zeta(3)) t_m^2,
///   coherence corner    -> (7 pi^4 / 360 zeta(3)) t_m,
///   dominant sector     -> 1 - subdominant.
/// Valid for t_m <= 1e-3 (relative error ~1e-5 at 1e-3, ~1e-11 at 1e-6);
/// larger t_m throws std::invalid_argument rather than return a value
/// outside the expansion's domain.
ThermalCoefficients coefficients_asymptotic(int s, double t_m);

/// Temperature in kelvin corresponding to reduced temperature t_m for a
/// particle of the given rest energy in eV (default: electron, 5.11e5 eV),
/// using k_B = 8.617e-5 eV/K.
double kelvin_from_tm(double t_m, double rest_energy_ev = 5.11e5);

}  // namespace fermipar::thermal
