// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <utility>

#include "fermipar/linalg.hpp"

namespace fermipar::dirac {

using linalg::Complex;
using linalg::Mat2;
using linalg::Mat4;
using linalg::Vec2;
using linalg::Vec4;

Mat2 identity2();
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();

/// pauli(1) = sigma_x, pauli(2) = sigma_y, pauli(3) = sigma_z.
Mat2 pauli(int k);

/// Dirac matrices written on the intrinsic-parity (slow) x spin (fast)
/// two-qubit basis (|+,up>, |+,dn>, |-,up>, |-,dn>):
///   alpha_k = sigma_x (x) sigma_k,  beta = gamma0 = sigma_z (x) 1,
///   gamma_k = i sigma_y (x) sigma_k,  gamma5 = sigma_x (x) 1.
/// These satisfy the Clifford relations exactly (entries are 0, +-1, +-i).
struct DiracMatrices {
  std::array<Mat4, 3> alpha;
  Mat4 beta;
  Mat4 gamma0;
  std::array<Mat4, 3> gamma;
  Mat4 gamma5;
};

const DiracMatrices& dirac_matrices();

/// Spin eigenstates along the momentum direction (theta, phi):
/// (p_hat . sigma) omega_pm = +- omega_pm, with the standard phase
/// omega_+ = (cos(theta/2), e^{i phi} sin(theta/2)).
std::pair<Vec2, Vec2> helicity_doublet(double theta, double phi);

/// Superposition pair built on the helicity doublet,
///   h_pm = cos(chi) omega_+  +-  e^{i mu} sin(chi) omega_-.
/// Identities: <h_+|h_-> = cos(2 chi); (p_hat . sigma) h_pm = h_mp;
/// chi -> pi - chi maps h_pm -> -h_mp (both members pick up the minus,
/// so the pair of projectors |h_pm><h_pm| is simply exchanged).
std::pair<Vec2, Vec2> h_states(double chi, double mu, double theta, double phi);

/// On-shell kinematics. make() validates p >= 0, m > 0, theta in [0, pi],
/// phi in [0, 2 pi) and computes the energy as hypot(p, m), which is exact
/// to one ulp even for p/m ~ 1e300 or 1e-300.
struct KinematicPoint {
  double p = 0.0;
  double m = 1.0;
  double energy = 1.0;
  double theta = 0.0;
  double phi = 0.0;

  static KinematicPoint make(double p, double m, double theta, double phi);
};

/// Four-spinor of the parity-helicity model,
///   eta_s = N_s ( |+> (x) |h_+>  +  g_s |-> (x) |h_-> ),
/// with mixing amplitude g_s = p / (E + (-1)^{s+1} m), taken positive for
/// both branches s = 1 (parity-even dominant at rest) and s = 0
/// (parity-odd dominant at rest). The normalized amplitudes are evaluated
/// in the cancellation-free forms
///   sqrt((E + m) / 2E)   and   p / sqrt(2E (E + m)),
/// so no precision is lost in either the p << m or p >> m regime.
/// Throws std::invalid_argument unless s is 0 or 1.
Vec4 eta_state(int s, const KinematicPoint& kin, double chi, double mu);

/// Projector |v><v| / <v|v>. Throws std::invalid_argument on a zero vector.
Mat4 pure_density(const Vec4& state);

/// Which outer product of the h-doublet to average over directions.
enum class AvgKind { plus_plus, minus_minus, plus_minus, minus_plus };

/// Direction-average quadrature resolution. The polar angle uses
/// Gauss-Legendre nodes in theta itself (the integrands are trigonometric
/// polynomials in theta, so convergence is geometric); the azimuth uses the
/// uniform trapezoid rule, exact for the finite Fourier content in phi.
struct AngularGrid {
  int n_theta = 64;
  int n_phi = 128;
};

/// Uniform average over the momentum direction,
///   (1 / 4 pi) int dOmega |h_a(theta, phi)> <h_b(theta, phi)|,
/// for the pair selected by `kind`. Closed forms (tested against this
/// routine): the ++ average is diag(n_+, n_-) with
/// n_pm = 1/2 +- (pi/8) sin(2 chi) cos(mu); the +- average is
/// diag(nt_+, nt_-) with nt_pm = cos(2 chi)/2 +- i (pi/8) sin(2 chi) sin(mu).
Mat2 angular_average(AvgKind kind, double chi, double mu,
                     const AngularGrid& grid = {});

}  // namespace fermipar::dirac
