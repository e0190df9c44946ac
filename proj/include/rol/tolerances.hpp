#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>

namespace rol {

inline constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

/// Relative tolerance used by approx_eq when none is given.
inline constexpr double kCompareTol = 1e-10;

/// Per-condition tolerance for Penrose / reverse-order-law verdicts.
inline constexpr double kClassifyTol = 1e-8;

/// Radians; an angle within this distance of 0 or pi/2 counts as exact.
inline constexpr double kAngleTol = 1e-7;

/// Relative gap under which consecutive singular values share a block.
inline constexpr double kGapTol = 1e-8;

/// Numerical-rank threshold relative to the largest singular value.
inline double default_rank_tol(std::size_t rows, std::size_t cols)
{
    return static_cast<double>(std::max<std::size_t>({rows, cols, 1})) * kMachineEps;
}

} // namespace rol
