#pragma once

// Frozen reference data for the weight-2 verification checks.

#include <cstdint>
#include <span>

namespace cuspdim::reference {

// The 29 integers in [0, 1000] that g0(N, 2) never attains.
std::span<const std::int64_t> missing_g0_weight2_values();

// The 40 levels with g0+(N, 2) = 100.
std::span<const std::uint32_t> levels_with_newform_dim_100();

}  // namespace cuspdim::reference
