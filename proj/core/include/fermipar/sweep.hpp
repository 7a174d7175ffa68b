// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fermipar/qinfo.hpp"

namespace fermipar::sweep {

/// One fully evaluated temperature point: thermal coefficients, helicity
/// population, the three entropies, mutual information and the smallest
/// partial-transpose eigenvalue.
struct OutputRecord {
  double t_m = 0.0;
  double m_pp = 0.0;
  double m_mm = 0.0;
  double m_pm = 0.0;
  double h_pp = 0.0;
  double entropy_rho1 = 0.0;
  double entropy_rho2 = 0.0;
  double entropy_rho12 = 0.0;
  double mutual_info = 0.0;
  double min_pt_eig = 0.0;
};

/// Canonical column order; also the CSV header.
const std::vector<std::string>& all_columns();

/// Field lookup by column name; throws std::invalid_argument for an
/// unknown name.
double column_value(const OutputRecord& record, const std::string& name);

/// Temperature scan at fixed (s, chi, mu).
struct SweepSpec {
  double t_min = 1e-3;
  double t_max = 1e2;
  int points = 61;  ///< 2 .. 100000
  bool log_spaced = true;
  int s = 1;
  double chi = 0.78539816339744830961;  ///< pi/4
  double mu = 0.0;
  double abs_tol = 1e-13;  ///< per-integral quadrature tolerance
  int threads = 0;         ///< 0 = hardware concurrency
};

/// Evaluates the full record at one temperature.
OutputRecord evaluate_point(int s, double t_m, double chi, double mu,
                            double abs_tol = 1e-13);

/// Runs the scan. Rows are computed concurrently but returned in grid
/// order, so the result is independent of scheduling; any worker exception
/// is rethrown on the calling thread. Throws std::invalid_argument for an
/// invalid spec.
std::vector<OutputRecord> run_sweep(const SweepSpec& spec);

/// Writes records as CSV: one header line with the column names, then one
/// line per record with values rendered at 17 significant digits (%.17g),
/// enough to round-trip doubles exactly. Bitwise deterministic for
/// identical inputs. Throws std::invalid_argument on an unknown column.
void write_csv(std::ostream& out, const std::vector<OutputRecord>& records,
               const std::vector<std::string>& columns = all_columns());

}  // namespace fermipar::sweep
