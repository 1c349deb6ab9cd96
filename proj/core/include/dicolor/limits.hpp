#pragma once

namespace dicolor::limits {

// Default size gates for the exact searches. Each caller may override the
// gate explicitly; the gate exists so a casual CLI call cannot start an
// exponential search on an oversized instance.
inline constexpr int kChromaticExact = 24;
inline constexpr int kDichromaticExact = 20;
inline constexpr int kOrderScan = 9;
inline constexpr int kPartitionScan = 10;
inline constexpr int kChainScan = 8;

}  // namespace dicolor::limits
