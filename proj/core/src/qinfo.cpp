// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include "fermipar/qinfo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fermipar/numerics.hpp"

namespace fermipar::qinfo {

void validate_params(const ModelParams& params) {
  if (params.s != 0 && params.s != 1) {
    throw std::invalid_argument("ModelParams: s must be 0 or 1");
  }
  if (!std::isfinite(params.t_m) || !(params.t_m > 0.0)) {
    throw std::invalid_argument("ModelParams: t_m must be finite and > 0");
  }
  if (!(params.chi >= 0.0 && params.chi <= M_PI / 2.0)) {
    throw std::invalid_argument("ModelParams: chi must lie in [0, pi/2]");
  }
  if (!(params.mu >= 0.0 && params.mu < 2.0 * M_PI)) {
    throw std::invalid_argument("ModelParams: mu must lie in [0, 2 pi)");
  }
}

AngularCoefficients angular_coefficients(double chi, double mu) {
  if (!std::isfinite(chi) || !std::isfinite(mu)) {
    throw std::invalid_argument("angular_coefficients: angles must be finite");
  }
  const double s2 = std::sin(2.0 * chi);
  const double c2 = std::cos(2.0 * chi);
  const double k = M_PI / 8.0;
  AngularCoefficients ac;
  ac.n_plus = 0.5 + k * s2 * std::cos(mu);
  ac.n_minus = 0.5 - k * s2 * std::cos(mu);
  ac.nt_plus = Complex(0.5 * c2, k * s2 * std::sin(mu));
  ac.nt_minus = Complex(0.5 * c2, -k * s2 * std::sin(mu));
  return ac;
}

Mat4 assemble_from(const thermal::ThermalCoefficients& tc,
                   const AngularCoefficients& ac) {
  Mat4 r = Mat4::Zero();
  r(0, 0) = ac.n_plus * tc.m_pp;
  r(1, 1) = ac.n_minus * tc.m_pp;
  r(2, 2) = ac.n_minus * tc.m_mm;
  r(3, 3) = ac.n_plus * tc.m_mm;
  r(0, 2) = ac.nt_plus * tc.m_pm;
  r(2, 0) = ac.nt_minus * tc.m_pm;
  r(1, 3) = ac.nt_minus * tc.m_pm;
  r(3, 1) = ac.nt_plus * tc.m_pm;
  return r;
}

TwoQubitDensity assemble_rho12(const ModelParams& params,
                               const thermal::ThermalCoefficients& tc) {
  validate_params(params);
  TwoQubitDensity d;
  d.params = params;
  d.coefficients = tc;
  d.angular = angular_coefficients(params.chi, params.mu);
  d.rho = assemble_from(tc, d.angular);

  const double trace_dev = std::abs(d.rho.trace().real() - 1.0) +
                           std::abs(d.rho.trace().imag());
  if (trace_dev > 1e-10) {
    throw std::runtime_error(
        "assemble_rho12: trace deviates from 1 by " + std::to_string(trace_dev) +
        "; thermal coefficients are inconsistent");
  }
  const double herm_dev = (d.rho - d.rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-12) {
    throw std::runtime_error("assemble_rho12: result is not Hermitian");
  }
  return d;
}

Mat4 rho12_from_spinor_integral(const ModelParams& params,
                                const SpinorIntegralGrid& grid) {
  validate_params(params);
  if (grid.q_max <= 0.0 || grid.radial_panels < 1 || grid.radial_nodes < 2 ||
      grid.n_theta < 2 || grid.n_phi < 4) {
    throw std::invalid_argument("rho12_from_spinor_integral: bad grid");
  }
  const auto radial = numerics::gauss_legendre_rule(grid.radial_nodes);
  const auto polar = numerics::gauss_legendre_rule(grid.n_theta);
  const double dphi = 2.0 * M_PI / grid.n_phi;

  // All entries of |eta><eta| depend on p and m only through p/m = q t_m,
  // so the radial integral runs at unit mass.
  Mat4 acc = Mat4::Zero();
  for (int panel = 0; panel < grid.radial_panels; ++panel) {
    const double a = grid.q_max * panel / grid.radial_panels;
    const double b = grid.q_max * (panel + 1) / grid.radial_panels;
    for (int i = 0; i < grid.radial_nodes; ++i) {
      const double q = 0.5 * (a + b) + 0.5 * (b - a) * radial.nodes[i];
      const double wq =
          0.5 * (b - a) * radial.weights[i] * thermal::fermi_dirac_pdf(q);
      if (wq == 0.0) continue;

      Mat4 direction = Mat4::Zero();
      for (int it = 0; it < grid.n_theta; ++it) {
        const double theta = 0.5 * M_PI * (polar.nodes[it] + 1.0);
        const double w_theta =
            0.5 * M_PI * polar.weights[it] * std::sin(theta);
        for (int ip = 0; ip < grid.n_phi; ++ip) {
          const auto kin =
              dirac::KinematicPoint::make(params.t_m * q, 1.0, theta, ip * dphi);
          const auto v = dirac::eta_state(params.s, kin, params.chi, params.mu);
          direction += (w_theta * dphi) * dirac::pure_density(v);
        }
      }
      acc += wq * (direction / (4.0 * M_PI));
    }
  }
  return acc;
}

Mat2 reduce_parity(const Mat4& rho) { return linalg::partial_trace(rho, 1); }

Mat2 reduce_helicity(const Mat4& rho) { return linalg::partial_trace(rho, 2); }

std::array<double, 4> rho12_eigenvalues_closed(
    const thermal::ThermalCoefficients& tc, const AngularCoefficients& ac) {
  // Spin-up block couples (n_+ m_pp, n_- m_mm) through nt_+ m_pm;
  // spin-down block couples (n_- m_pp, n_+ m_mm) through nt_- m_pm.
  const double coh2 = std::norm(ac.nt_plus) * tc.m_pm * tc.m_pm;
  auto pair = [coh2](double d1, double d2) {
    const double mean = 0.5 * (d1 + d2);
    const double gap = 0.5 * (d1 - d2);
    const double disc = std::sqrt(gap * gap + coh2);
    return std::array<double, 2>{mean + disc, mean - disc};
  };
  const auto up = pair(ac.n_plus * tc.m_pp, ac.n_minus * tc.m_mm);
  const auto dn = pair(ac.n_minus * tc.m_pp, ac.n_plus * tc.m_mm);
  std::array<double, 4> out{up[0], up[1], dn[0], dn[1]};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::array<double, 2> rho1_eigenvalues_closed(
    const thermal::ThermalCoefficients& tc, double chi) {
  const double gap = tc.m_pp - tc.m_mm;
  const double coh = 2.0 * tc.m_pm * std::cos(2.0 * chi);
  const double disc = 0.5 * std::sqrt(gap * gap + coh * coh);
  return {0.5 + disc, 0.5 - disc};
}

double helicity_population(const thermal::ThermalCoefficients& tc, double chi,
                           double mu) {
  return 0.5 +
         (M_PI / 8.0) * std::sin(2.0 * chi) * std::cos(mu) * (tc.m_pp - tc.m_mm);
}

namespace {

template <int N>
SpectralData spectral_of(const Eigen::Matrix<Complex, N, N>& rho) {
  const auto eig = linalg::hermitian_eigenvalues<N>(rho);
  SpectralData sd;
  sd.eigenvalues.assign(eig.begin(), eig.end());
  sd.entropy_nats = von_neumann_entropy(sd.eigenvalues);
  return sd;
}

}  // namespace

SpectralData spectral_data(const Mat2& rho) { return spectral_of<2>(rho); }
SpectralData spectral_data(const Mat4& rho) { return spectral_of<4>(rho); }

double von_neumann_entropy(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) {
    throw std::invalid_argument("von_neumann_entropy: empty spectrum");
  }
  double sum = 0.0;
  for (double x : eigenvalues) sum += x;
  if (std::abs(sum - 1.0) > 1e-8) {
    throw std::invalid_argument(
        "von_neumann_entropy: eigenvalues sum to " + std::to_string(sum) +
        ", expected 1");
  }
  double h = 0.0;
  for (double x : eigenvalues) {
    if (x < -1e-10) {
      throw std::domain_error("von_neumann_entropy: eigenvalue " +
                              std::to_string(x) + " below -1e-10");
    }
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double mutual_information(const ModelParams& params,
                          const thermal::ThermalCoefficients& tc) {
  const TwoQubitDensity d = assemble_rho12(params, tc);
  const double s12 = spectral_data(d.rho).entropy_nats;
  const double s1 = spectral_data(reduce_parity(d.rho)).entropy_nats;
  const double s2 = spectral_data(reduce_helicity(d.rho)).entropy_nats;
  const double info = s1 + s2 - s12;
  if (info < -1e-9) {
    throw std::runtime_error(
        "mutual_information: entropy combination is negative beyond "
        "round-off: " +
        std::to_string(info));
  }
  return info < 0.0 ? 0.0 : info;
}

PptReport ppt_check(const Mat4& rho) {
  const Mat4 pt = linalg::partial_transpose(rho, 2);
  PptReport rep;
  rep.max_pt_deviation = (pt - rho).cwiseAbs().maxCoeff();
  rep.pt_invariant = rep.max_pt_deviation <= 1e-12;
  rep.min_pt_eigenvalue = linalg::hermitian_eigenvalues<4>(pt)[3];
  rep.separable = rep.min_pt_eigenvalue >= -1e-10;
  return rep;
}

Mat4 charge_conjugate(const Mat4& rho) {
  static const Mat4 u = linalg::kron(dirac::sigma_y(), dirac::sigma_y());
  return u * rho.conjugate() * u;
}

}  // namespace fermipar::qinfo
