// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include "fermipar/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "fermipar/numerics.hpp"

namespace fermipar::thermal {

namespace {

using numerics::integrate_semi_infinite;
using numerics::kZeta3;
using numerics::kZeta5;

// e^{-q} / (1 + e^{-q}): the Fermi factor 1/(e^q + 1) written so it never
// overflows and underflows gracefully to 0 for large q.
double fermi_factor(double q) {
  const double e = std::exp(-q);
  return e / (1.0 + e);
}

double checked(const numerics::QuadratureResult& r, const char* what) {
  if (!r.converged) {
    throw std::runtime_error(std::string("coefficients: quadrature for ") +
                             what + " did not converge within the budget");
  }
  return r.value;
}

}  // namespace

double fermi_dirac_pdf(double q) {
  if (!(q >= 0.0)) {
    throw std::invalid_argument("fermi_dirac_pdf: q must be >= 0");
  }
  // Beyond q ~ 745 the Fermi factor underflows to 0; return 0 directly so
  // huge q^2 never multiplies it into 0 * inf.
  if (q > 745.0) return 0.0;
  return (2.0 / (3.0 * kZeta3)) * q * q * fermi_factor(q);
}

double stable_defect(double x) {
  if (!(x > -1.0)) {
    throw std::invalid_argument("stable_defect: x must be > -1");
  }
  const double root = std::sqrt(1.0 + x);
  // For large x the direct form 1 - 1/sqrt(1+x) loses nothing (the
  // subtracted term is tiny) and avoids inf/inf at x near DBL_MAX.
  if (x > 1e8) return 1.0 - 1.0 / root;
  return x / (root * (1.0 + root));
}

ThermalCoefficients coefficients(int s, double t_m, double abs_tol,
                                 std::int64_t budget) {
  if (s != 0 && s != 1) {
    throw std::invalid_argument("coefficients: s must be 0 or 1");
  }
  if (!std::isfinite(t_m) || !(t_m > 0.0)) {
    throw std::invalid_argument("coefficients: t_m must be finite and > 0");
  }

  const double t2 = t_m * t_m;
  const double norm = 1.0 / (3.0 * kZeta3);

  // Dominant sector < (E+m)/2E >: everywhere a sum of positive terms.
  const double dominant =
      norm * checked(integrate_semi_infinite(
                         [t2](double q) {
                           return q * q * (1.0 + 1.0 / std::sqrt(1.0 + t2 * q * q)) *
                                  fermi_factor(q);
                         },
                         abs_tol, budget),
                     "the dominant sector");

  // Mass defect < (E-m)/2E >; representation switches at t_m = 1 (see header).
  double defect;
  if (t_m <= 1.0) {
    defect = t2 * norm *
             checked(integrate_semi_infinite(
                         [t2](double q) {
                           const double x = t2 * q * q;
                           const double root = std::sqrt(1.0 + x);
                           return q * q * q * q / (root * (1.0 + root)) *
                                  fermi_factor(q);
                         },
                         abs_tol, budget),
                     "the mass defect");
  } else {
    defect = norm * checked(integrate_semi_infinite(
                                [t2](double q) {
                                  return q * q * stable_defect(t2 * q * q) *
                                         fermi_factor(q);
                                },
                                abs_tol, budget),
                            "the mass defect");
  }

  // Coherence corner < p/2E >; factor t_m placement follows the same rule.
  double corner;
  if (t_m <= 1.0) {
    corner = t_m * norm *
             checked(integrate_semi_infinite(
                         [t2](double q) {
                           return q * q * q / std::sqrt(1.0 + t2 * q * q) *
                                  fermi_factor(q);
                         },
                         abs_tol, budget),
                     "the coherence corner");
  } else {
    corner = norm * checked(integrate_semi_infinite(
                                [t2, t_m](double q) {
                                  return t_m * q * q * q /
                                         std::sqrt(1.0 + t2 * q * q) *
                                         fermi_factor(q);
                                },
                                abs_tol, budget),
                            "the coherence corner");
  }

  ThermalCoefficients c;
  c.m_pp = (s == 1) ? dominant : defect;
  c.m_mm = (s == 1) ? defect : dominant;
  c.m_pm = corner;
  return c;
}

ThermalCoefficients coefficients_asymptotic(int s, double t_m) {
  if (s != 0 && s != 1) {
    throw std::invalid_argument("coefficients_asymptotic: s must be 0 or 1");
  }
  if (!std::isfinite(t_m) || !(t_m > 0.0) || t_m > 1e-3) {
    throw std::invalid_argument(
        "coefficients_asymptotic: valid only for 0 < t_m <= 1e-3");
  }
  const double pi4 = std::pow(M_PI, 4);
  const double defect = (15.0 * kZeta5 / (4.0 * kZeta3)) * t_m * t_m;
  const double corner = (7.0 * pi4 / (360.0 * kZeta3)) * t_m;
  ThermalCoefficients c;
  c.m_pp = (s == 1) ? 1.0 - defect : defect;
  c.m_mm = (s == 1) ? defect : 1.0 - defect;
  c.m_pm = corner;
  return c;
}

double kelvin_from_tm(double t_m, double rest_energy_ev) {
  if (!std::isfinite(t_m) || !(t_m > 0.0)) {
    throw std::invalid_argument("kelvin_from_tm: t_m must be finite and > 0");
  }
  if (!std::isfinite(rest_energy_ev) || !(rest_energy_ev > 0.0)) {
    throw std::invalid_argument(
        "kelvin_from_tm: rest_energy_ev must be finite and > 0");
  }
  constexpr double kBoltzmannEvPerK = 8.617e-5;
  return t_m * rest_energy_ev / kBoltzmannEvPerK;
}

}  // namespace fermipar::thermal
