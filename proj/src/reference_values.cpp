#include "cuspdim/reference_values.hpp"

#include <array>

namespace cuspdim::reference {

namespace {

// The 29 integers below 1000 that are not the genus of any X_0(N): verified
// by the certified enumeration in analysis.cpp and frozen here as the
// expected answer.
constexpr std::array<std::int64_t, 29> kMissingG0Weight2 = {
    150, 180, 210, 286, 304, 312, 336, 338, 348, 350, 480, 536, 570, 598, 606,
    620, 666, 678, 706, 730, 756, 780, 798, 850, 876, 896, 906, 916, 970,
};

// All 40 levels N with dim S_2^new(Gamma_0(N)) = 100, frozen from the same
// certified enumeration.
constexpr std::array<std::uint32_t, 40> kLevelsNewform100 = {
    1213, 1331, 2169, 2583,  2662,  2745,  3208,  3232, 3465, 3608,
    4040, 4302, 4338, 4772,  4804,  4848,  5084,  5092, 5166, 5252,
    5324, 5490, 5572, 5904,  6336,  6820,  6930,  7056, 7188, 7212,
    7920, 8052, 8484, 8652,  8676,  8940,  9060,  10332, 10980, 13860,
};

}  // namespace

std::span<const std::int64_t> missing_g0_weight2_values() { return kMissingG0Weight2; }

std::span<const std::uint32_t> levels_with_newform_dim_100() { return kLevelsNewform100; }

}  // namespace cuspdim::reference
