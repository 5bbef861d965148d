#pragma once

#include <cstddef>
#include <cstdint>

// Sweep bounds for the acceptance criteria.
namespace bounds {

inline constexpr std::int64_t kCoinSweepD = 200;
inline constexpr std::int64_t kRouteSweepD = 60;
inline constexpr std::int64_t kSequenceSweepD = 200;
inline constexpr std::int64_t kValuationSweepD = 60;
inline constexpr std::int64_t kDiscrepancySweepD = 200;
inline constexpr std::int64_t kReconstructSweepD = 60;
inline constexpr std::int64_t kQuasiSmoothSweepD = 200;

// Exponential search: supports of at most kSearchSupport points of L(k) in [0, kSearchBox * d)^2,
// plus every subset of the staircase.
inline constexpr std::int64_t kSearchD = 12;
inline constexpr std::int64_t kSearchBox = 3;
inline constexpr std::size_t kSearchSupport = 2;

}  // namespace bounds
