#pragma once

// Regression values frozen from an independent NumPy/mpmath oracle sweep.
// Asserted with 20% slack where used as bounds.

namespace kappa::fixtures {

// max over t in {50, 100, ..., 1600} of |phi_t(a_1) - leading term| * t^{3/2}, xi = 1, Y = 1.
inline constexpr double kSl2LeadingWeightedError = 0.1488;

// max over n in {50, 100, ..., 1600} of |P_n(cos 1) - leading term| * n^{3/2}.
inline constexpr double kSu2LeadingWeightedError = 0.2212;

// Cesaro mean for u = (1, -1), f = (1, 1), h = 0.01, N = 1000, m = 1.
inline constexpr double kCesaroTwoFrequencyMean = 4.21965;

// |phi_{i 1.5 rho}(a_4)|, SL(2), outside the bounded region.
inline constexpr double kGrowthModulusY4 = 5.636;

inline constexpr double kSlack = 1.2;

}  // namespace kappa::fixtures
