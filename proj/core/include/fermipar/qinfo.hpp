// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <vector>

#include "fermipar/dirac.hpp"
#include "fermipar/linalg.hpp"
#include "fermipar/thermal.hpp"

namespace fermipar::qinfo {

using linalg::Complex;
using linalg::Mat2;
using linalg::Mat4;

/// Full parameter set of the thermal parity-helicity state.
struct ModelParams {
  int s = 1;         ///< branch: 1 = parity-even dominant, 0 = parity-odd
  double t_m = 1.0;  ///< reduced temperature T/m
  double chi = 0.0;  ///< superposition angle, [0, pi/2]
  double mu = 0.0;   ///< superposition phase, [0, 2 pi)
};

/// Throws std::invalid_argument if any field is outside its domain.
void validate_params(const ModelParams& params);

/// Direction averages of the h doublet:
///   n_pm  = diag of <|h_+><h_+|>  = 1/2 +- (pi/8) sin(2 chi) cos(mu)
///   nt_pm = diag of <|h_+><h_-|>  = cos(2 chi)/2 +- i (pi/8) sin(2 chi) sin(mu)
/// with n_+ + n_- = 1, nt_- = conj(nt_+). The off-diagonal entries of both
/// averages vanish identically.
struct AngularCoefficients {
  double n_plus = 0.0;
  double n_minus = 0.0;
  Complex nt_plus{0.0, 0.0};
  Complex nt_minus{0.0, 0.0};
};

AngularCoefficients angular_coefficients(double chi, double mu);

/// Assembled thermal state together with everything used to build it.
struct TwoQubitDensity {
  Mat4 rho;
  ModelParams params;
  thermal::ThermalCoefficients coefficients;
  AngularCoefficients angular;
};

/// Places thermal and angular coefficients on the 4x4 grid:
/// diagonal (n_+ m_pp, n_- m_pp, n_- m_mm, n_+ m_mm); parity-coherence
/// corners (0,2) = nt_+ m_pm, (1,3) = nt_- m_pm and their conjugates;
/// the remaining eight entries are exactly zero.
Mat4 assemble_from(const thermal::ThermalCoefficients& tc,
                   const AngularCoefficients& ac);

/// Thermal two-qubit state: computes the angular coefficients for
/// params.chi, params.mu and assembles. Validates the result (unit trace,
/// Hermitian) and throws std::runtime_error if the inputs are inconsistent.
TwoQubitDensity assemble_rho12(const ModelParams& params,
                               const thermal::ThermalCoefficients& tc);

/// Resolution of the independent spinor-integral route.
struct SpinorIntegralGrid {
  double q_max = 64.0;    ///< radial truncation; pdf tail mass < 1e-24
  int radial_panels = 32; ///< composite panels on [0, q_max]
  int radial_nodes = 20;  ///< Gauss-Legendre nodes per panel
  int n_theta = 48;
  int n_phi = 16;
};

/// Direct construction of the thermal state as
///   int dq pdf(q) (1/4pi) int dOmega |eta_s(q t_m, theta, phi)><eta_s|,
/// by composed fixed-order quadrature. Shares no factorization or
/// assembly shortcut with assemble_rho12, so agreement between the two
/// routes (<= 1e-8 entrywise at default resolution) validates both.
Mat4 rho12_from_spinor_integral(const ModelParams& params,
                                const SpinorIntegralGrid& grid = {});

/// Reduced state of the intrinsic-parity qubit (helicity traced out):
///   [[m_pp, m_pm cos(2 chi)], [m_pm cos(2 chi), m_mm]].
Mat2 reduce_parity(const Mat4& rho);

/// Reduced state of the helicity qubit (parity traced out):
///   diag(h_pp, 1 - h_pp) with
///   h_pp = 1/2 + (pi/8) sin(2 chi) cos(mu) (m_pp - m_mm).
Mat2 reduce_helicity(const Mat4& rho);

/// Closed-form spectrum of the assembled state: two 2x2 blocks, each
///   mean +- sqrt(mean_gap^2 + |nt m_pm|^2),
/// returned sorted descending. Agrees with the dense eigensolver to
/// ~1e-15; the dual route guards both against formula slips.
std::array<double, 4> rho12_eigenvalues_closed(
    const thermal::ThermalCoefficients& tc, const AngularCoefficients& ac);

/// Closed-form spectrum of the parity marginal:
///   1/2 +- (1/2) sqrt((m_pp - m_mm)^2 + 4 m_pm^2 cos^2(2 chi)).
std::array<double, 2> rho1_eigenvalues_closed(
    const thermal::ThermalCoefficients& tc, double chi);

/// Upper population of the helicity marginal (see reduce_helicity).
double helicity_population(const thermal::ThermalCoefficients& tc, double chi,
                           double mu);

/// Eigenvalues plus entropy of a density matrix.
struct SpectralData {
  std::vector<double> eigenvalues;  ///< sorted descending
  double entropy_nats = 0.0;
};

SpectralData spectral_data(const Mat2& rho);
SpectralData spectral_data(const Mat4& rho);

/// -sum lambda ln lambda over the given spectrum, in nats.
/// Requires sum(lambda) = 1 within 1e-8 (std::invalid_argument otherwise).
/// Eigenvalues in [-1e-10, 0) are round-off and clamp to zero; anything
/// below -1e-10 indicates a real negativity and throws std::domain_error.
double von_neumann_entropy(const std::vector<double>& eigenvalues);

/// I(1:2) = S(rho_1) + S(rho_2) - S(rho_12), computed through the dense
/// eigensolver pipeline (assemble -> reduce -> diagonalize). Non-negative
/// by subadditivity; values in (-1e-9, 0) clamp to zero, below that the
/// pipeline is inconsistent and std::runtime_error is thrown.
double mutual_information(const ModelParams& params,
                          const thermal::ThermalCoefficients& tc);

/// Positive-partial-transpose test. For this state family the partial
/// transpose over helicity equals the state itself (the coherence block
/// is diagonal), so the spectrum stays positive and the state is PPT,
/// hence separable (two qubits: PPT is necessary and sufficient).
struct PptReport {
  double max_pt_deviation = 0.0;   ///< max |PT(rho) - rho| entry
  double min_pt_eigenvalue = 0.0;  ///< smallest eigenvalue of PT(rho)
  bool pt_invariant = false;       ///< PT(rho) == rho within 1e-12
  bool separable = false;          ///< min PT eigenvalue >= -1e-10
};

PptReport ppt_check(const Mat4& rho);

/// Antiunitary charge conjugation C = (sigma_y (x) sigma_y) K applied to a
/// density matrix: rho -> U conj(rho) U with U = sigma_y (x) sigma_y.
///
/// Exact identity (tested): C(rho(chi)) equals the state reassembled with
/// m_pp <-> m_mm, nt_+ <-> nt_- and conjugated by the parity-local gauge
/// sigma_z (x) 1, i.e. the swap reconstruction with the sign of its
/// coherence corners flipped. The gauge drops out of every spectral
/// quantity, so C preserves the spectrum and swaps the parity populations;
/// plain entrywise equality with the swap reconstruction holds only where
/// nt m_pm = 0 (the corners differ by exactly 2 |nt_+| m_pm otherwise).
Mat4 charge_conjugate(const Mat4& rho);

}  // namespace fermipar::qinfo
