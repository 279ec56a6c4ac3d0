#pragma once

#include <cstddef>

// Every tolerance and sample count used by the numeric layer lives here so
// the bounds the test suites pin are visible in one place.
namespace opran::constants {

// Input validation.
inline constexpr double kHermitianTol = 1e-10;   // ||M - M*|| relative
inline constexpr double kUnitaryTol = 1e-10;     // ||U*U - I||
inline constexpr double kFrameTol = 1e-10;       // ||F*F - I|| for subspace frames

// Decomposition residuals.
inline constexpr double kJacobiOffdiagTol = 1e-13;  // off-diagonal Frobenius, relative
inline constexpr std::size_t kJacobiMaxSweeps = 100;
inline constexpr double kEigResidualTol = 1e-9;  // ||M V - V diag|| relative
inline constexpr double kSqrtResidualTol = 1e-8; // ||R R - M|| relative
inline constexpr double kPolarResidualTol = 1e-8;

// Rank and binning.
inline constexpr double kRankRelTol = 1e-12;     // sigma > max(r,c) * sigma_max * this
inline constexpr double kBinBoundarySnap = 1e-12;  // dyadic boundary tie window, relative
inline constexpr double kDefaultKernelTol = 1e-12; // range_shells kernel cut, relative

// Subspace comparisons.
inline constexpr double kIntersectionTol = 1e-8; // principal angle cos within this of 1

// Verification bounds and Monte Carlo volume.
inline constexpr double kBoundSlack = 1e-9;      // slack on theorem-backed inequalities
inline constexpr double kGroupLawTol = 1e-10;
inline constexpr double kNotSurjectiveTol = 1e-12;  // lambda_min cut, relative
inline constexpr std::size_t kStabilitySamples = 100;
inline constexpr std::size_t kRadiusSamples = 200;

}  // namespace opran::constants
