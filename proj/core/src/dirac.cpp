// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include "fermipar/dirac.hpp"

#include <cmath>

#include "fermipar/numerics.hpp"

namespace fermipar::dirac {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 identity2() { return Mat2::Identity(); }

Mat2 sigma_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 pauli(int k) {
  switch (k) {
    case 1:
      return sigma_x();
    case 2:
      return sigma_y();
    case 3:
      return sigma_z();
    default:
      throw std::invalid_argument("pauli: k must be 1, 2, or 3");
  }
}

const DiracMatrices& dirac_matrices() {
  static const DiracMatrices dm = [] {
    DiracMatrices d;
    for (int k = 0; k < 3; ++k) {
      d.alpha[k] = linalg::kron(sigma_x(), pauli(k + 1));
      d.gamma[k] = kI * linalg::kron(sigma_y(), pauli(k + 1));
    }
    d.beta = linalg::kron(sigma_z(), identity2());
    d.gamma0 = d.beta;
    d.gamma5 = linalg::kron(sigma_x(), identity2());
    return d;
  }();
  return dm;
}

std::pair<Vec2, Vec2> helicity_doublet(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("helicity_doublet: angles must be finite");
  }
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex w = std::polar(1.0, phi);
  Vec2 up, dn;
  up << c, w * s;
  dn << s, -w * c;
  return {up, dn};
}

std::pair<Vec2, Vec2> h_states(double chi, double mu, double theta, double phi) {
  if (!std::isfinite(chi) || !std::isfinite(mu)) {
    throw std::invalid_argument("h_states: chi and mu must be finite");
  }
  auto [omega_p, omega_m] = helicity_doublet(theta, phi);
  const double c = std::cos(chi);
  const Complex ws = std::polar(1.0, mu) * std::sin(chi);
  return {c * omega_p + ws * omega_m, c * omega_p - ws * omega_m};
}

KinematicPoint KinematicPoint::make(double p, double m, double theta,
                                    double phi) {
  if (!std::isfinite(p) || !(p >= 0.0)) {
    throw std::invalid_argument("KinematicPoint: p must be finite and >= 0");
  }
  if (!std::isfinite(m) || !(m > 0.0)) {
    throw std::invalid_argument("KinematicPoint: m must be finite and > 0");
  }
  if (!(theta >= 0.0 && theta <= M_PI)) {
    throw std::invalid_argument("KinematicPoint: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * M_PI)) {
    throw std::invalid_argument("KinematicPoint: phi must lie in [0, 2 pi)");
  }
  KinematicPoint k;
  k.p = p;
  k.m = m;
  k.energy = std::hypot(p, m);
  k.theta = theta;
  k.phi = phi;
  return k;
}

Vec4 eta_state(int s, const KinematicPoint& kin, double chi, double mu) {
  if (s != 0 && s != 1) {
    throw std::invalid_argument("eta_state: s must be 0 or 1");
  }
  const double e = kin.energy;
  // Normalized amplitudes of the two parity sectors. `large` tends to 1 and
  // `small` to 0 at rest; both tend to 1/sqrt(2) in the massless limit.
  // Evaluated on the ratios m/E <= 1 and p/E <= 1 so that no intermediate
  // can overflow even at E ~ 1e300 (2E(E+m) would be inf there).
  const double m_over_e = kin.m / e;
  const double large = std::sqrt(0.5 * (1.0 + m_over_e));
  const double small = (kin.p / e) / std::sqrt(2.0 * (1.0 + m_over_e));
  const double a_even = (s == 1) ? large : small;
  const double a_odd = (s == 1) ? small : large;

  auto [h_plus, h_minus] = h_states(chi, mu, kin.theta, kin.phi);
  Vec4 v;
  v.segment<2>(0) = a_even * h_plus;
  v.segment<2>(2) = a_odd * h_minus;
  return v;
}

Mat4 pure_density(const Vec4& state) {
  const double n2 = state.squaredNorm();
  if (!(n2 > 1e-300)) {
    throw std::invalid_argument("pure_density: zero state vector");
  }
  return (state * state.adjoint()) / n2;
}

Mat2 angular_average(AvgKind kind, double chi, double mu,
                     const AngularGrid& grid) {
  if (grid.n_theta < 1 || grid.n_phi < 1) {
    throw std::invalid_argument("angular_average: grid sizes must be >= 1");
  }
  const auto rule = numerics::gauss_legendre_rule(grid.n_theta);
  const bool left_plus =
      (kind == AvgKind::plus_plus || kind == AvgKind::plus_minus);
  const bool right_plus =
      (kind == AvgKind::plus_plus || kind == AvgKind::minus_plus);

  const double dphi = 2.0 * M_PI / grid.n_phi;
  Mat2 total = Mat2::Zero();
  for (int i = 0; i < grid.n_theta; ++i) {
    const double theta = 0.5 * M_PI * (rule.nodes[i] + 1.0);
    const double w_theta = 0.5 * M_PI * rule.weights[i] * std::sin(theta);
    Mat2 slice = Mat2::Zero();
    for (int j = 0; j < grid.n_phi; ++j) {
      auto [h_plus, h_minus] = h_states(chi, mu, theta, j * dphi);
      const Vec2& left = left_plus ? h_plus : h_minus;
      const Vec2& right = right_plus ? h_plus : h_minus;
      slice += left * right.adjoint();
    }
    total += (w_theta * dphi) * slice;
  }
  return total / (4.0 * M_PI);
}

}  // namespace fermipar::dirac
