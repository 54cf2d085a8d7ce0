#pragma once

// Published numeric tables, transcribed cell for cell as printed. Nothing
// here is corrected; disagreements are surfaced by the verification suites.

#include <array>
#include <cstdint>

namespace quid::reference {

/// Columns N of the w-minus / w-plus tables.
inline constexpr std::array<std::uint32_t, 9> kWModuli = {2, 3, 4, 5, 6,
                                                          7, 10, 11, 12};
/// Rows n = 4..8.
inline constexpr unsigned kWFirstLength = 4;
inline constexpr unsigned kWLastLength = 8;

using WTable = std::array<std::array<std::uint64_t, 9>, 5>;

inline constexpr WTable kWMinus = {{
    {3, 2, 4, 4, 6, 6, 12, 10, 8},
    {5, 10, 20, 26, 50, 50, 130, 122, 200},
    {11, 35, 96, 149, 385, 391, 1639, 1451, 3360},
    {2, 91, 336, 651, 1911, 2451, 13671, 14763, 30576},
    {43, 260, 1344, 3224, 11180, 17100, 138632, 162260, 349440},
}};

inline constexpr WTable kWPlus = {{
    {3, 5, 8, 9, 15, 13, 27, 21, 40},
    {5, 10, 20, 26, 50, 50, 130, 122, 200},
    {11, 26, 80, 124, 286, 342, 1364, 130, 2080},
    {21, 91, 336, 651, 1911, 2451, 13671, 14763, 30576},
    {43, 287, 1408, 3349, 12341, 17443, 148307, 163591, 404096},
}};

/// S/T table over Z/4Z, rows n = 2..10, columns S, -S, T, -T.
inline constexpr unsigned kStFirstLength = 2;
inline constexpr unsigned kStLastLength = 10;
inline constexpr std::array<std::array<std::uint64_t, 4>, 9> kSt = {{
    {0, 0, 0, 1},
    {0, 4, 1, 1},
    {4, 4, 8, 4},
    {32, 16, 20, 20},
    {80, 80, 80, 96},
    {320, 384, 336, 336},
    {1344, 1344, 1408, 1344},
    {5632, 5376, 5440, 5440},
    {21760, 21760, 21760, 22016},
}};

/// Irreducible class counts v_N and longest lengths ell_N for N = 2..16.
struct VEntry {
  std::uint32_t modulus;
  std::uint64_t v;
  std::uint32_t ell;
};
inline constexpr std::array<VEntry, 15> kVTable = {{
    {2, 2, 4},          {3, 3, 4},        {4, 6, 4},
    {5, 9, 6},          {6, 10, 6},       {7, 42, 9},
    {8, 48, 8},         {9, 229, 12},     {10, 203, 12},
    {11, 25686, 19},    {12, 1161, 15},   {13, 2913226, 25},
    {14, 90748, 20},    {15, 14346911, 26}, {16, 8259494, 24},
}};

}  // namespace quid::reference
