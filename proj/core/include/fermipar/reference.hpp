// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <cstddef>

namespace fermipar::reference {

/// Published thermal-coefficient values (dominant branch s = 1; the s = 0
/// branch swaps m_pp and m_mm). Five significant figures as printed.
struct CoefficientRow {
  double t_m;
  double m_pp;
  double m_mm;
  double m_pm;
};

extern const std::array<CoefficientRow, 9> kCoefficientTable;

/// Published sector differences m_pp - m_mm for s = 1; the s = 0 column is
/// the exact negation. The 1e5 row is published as 0 (the true value,
/// ~4.6e-6, is below the table's printing precision).
struct DifferenceRow {
  double t_m;
  double diff;
};

extern const std::array<DifferenceRow, 7> kDifferenceTable;

/// Matching tolerance for published cells: five printed digits give half an
/// ulp of ~1e-5 absolute on O(1) entries and ~1e-3 relative on the
/// scientific-notation ones.
inline constexpr double kCellAbsTol = 1e-5;
inline constexpr double kCellRelTol = 1e-3;

bool cell_matches(double computed, double published);

}  // namespace fermipar::reference
