#pragma once

#include <array>
#include <cstdint>

namespace spikecipher::sdes::tables {

// Raw permutation tables, 1-based source positions: output bit i is taken
// from input bit table[i]. Shared by the BitVector pipeline and the compiled
// byte-level lookup tables.
inline constexpr std::array<int, 8> kIp{2, 6, 3, 1, 4, 8, 5, 7};
inline constexpr std::array<int, 8> kIpInverse{4, 1, 3, 5, 7, 2, 8, 6};
inline constexpr std::array<int, 8> kExpansion{4, 1, 2, 3, 2, 3, 4, 1};
inline constexpr std::array<int, 4> kP4{2, 4, 3, 1};

// Substitution boxes. Row index is bits (1,4) of the nibble, column index is
// bits (2,3), both read as 2-bit binary. Rows need not be permutations.
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kS0{{
    {0, 1, 2, 3},
    {3, 0, 2, 1},
    {1, 3, 0, 2},
    {3, 2, 1, 1},
}};

inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kS1{{
    {0, 2, 1, 3},
    {2, 3, 1, 0},
    {2, 1, 0, 3},
    {0, 2, 3, 1},
}};

}  // namespace spikecipher::sdes::tables
