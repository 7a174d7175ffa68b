// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include "fermipar/reference.hpp"

#include <cmath>

namespace fermipar::reference {

const std::array<CoefficientRow, 9> kCoefficientTable = {{
    {1e5, 0.50000, 0.50000, 0.50000},
    {1e2, 0.50228, 0.49772, 0.49999},
    {10.0, 0.52264, 0.47736, 0.49912},
    {1.0, 0.68587, 0.31413, 0.45246},
    {1e-1, 0.97298, 2.7021e-2, 0.14465},
    {1e-2, 0.99968, 3.2275e-4, 1.5741e-2},
    {1e-5, 1.0000, 3.2349e-10, 1.5757e-5},
    {1e-10, 1.0000, 3.2349e-20, 1.5757e-10},
    {1e-12, 1.0000, 3.2349e-24, 1.5757e-12},
}};

const std::array<DifferenceRow, 7> kDifferenceTable = {{
    {1e5, 0.0},
    {1e2, 0.00456},
    {10.0, 0.04528},
    {1.0, 0.37174},
    {1e-1, 0.94596},
    {1e-2, 0.99936},
    {1e-5, 1.0},
}};

bool cell_matches(double computed, double published) {
  const double dev = std::abs(computed - published);
  return dev <= kCellAbsTol || dev <= kCellRelTol * std::abs(published);
}

}  // namespace fermipar::reference
