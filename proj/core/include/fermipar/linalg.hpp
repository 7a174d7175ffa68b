// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace fermipar::linalg {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

/// Kronecker product of two 2x2 matrices; the first factor is the slow
/// (block) index, matching the |parity, helicity> basis ordering.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

/// Reduced density matrix of the named factor of a two-qubit state:
/// subsystem 1 keeps the slow (first) factor, subsystem 2 the fast (second)
/// one; the other factor is traced out.
inline Mat2 partial_trace(const Mat4& rho, int subsystem) {
  Mat2 out = Mat2::Zero();
  if (subsystem == 1) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * i + k, 2 * j + k);
      }
    }
  } else if (subsystem == 2) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * k + i, 2 * k + j);
      }
    }
  } else {
    throw std::invalid_argument("partial_trace: subsystem must be 1 or 2");
  }
  return out;
}

/// Transpose of one tensor factor (the positive-partial-transpose map).
inline Mat4 partial_transpose(const Mat4& rho, int subsystem) {
  Mat4 out;
  if (subsystem == 1) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            out(2 * i + a, 2 * j + b) = rho(2 * j + a, 2 * i + b);
          }
        }
      }
    }
  } else if (subsystem == 2) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            out(2 * i + a, 2 * j + b) = rho(2 * i + b, 2 * j + a);
          }
        }
      }
    }
  } else {
    throw std::invalid_argument("partial_transpose: subsystem must be 1 or 2");
  }
  return out;
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
///
/// The input is symmetrized as (m + m^dagger)/2 before solving, but a
/// deviation from Hermiticity above herm_tol (max absolute entry of
/// m - m^dagger) is rejected: silently symmetrizing a matrix that is not
/// Hermitian would hide assembly bugs upstream.
template <int N>
std::array<double, N> hermitian_eigenvalues(
    const Eigen::Matrix<Complex, N, N>& m, double herm_tol = 1e-10) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev <= herm_tol)) {
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix deviates from Hermitian by " +
        std::to_string(dev));
  }
  const Eigen::Matrix<Complex, N, N> sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, N, N>> solver(
      sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  }
  std::array<double, N> out{};
  for (int i = 0; i < N; ++i) out[i] = solver.eigenvalues()(N - 1 - i);
  return out;
}

}  // namespace fermipar::linalg
