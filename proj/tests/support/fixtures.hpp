#pragma once

#include <array>
#include <cstdint>

namespace walls::testing {

using ReferenceTable = std::array<std::array<std::int64_t, 7>, 7>;

// Tableaux of shape (n,n,k) with bottom-row walls, n <= 6.
inline constexpr ReferenceTable kATable = {{
    {1},
    {1, 1},
    {3, 7, 7},
    {15, 57, 106, 106},
    {105, 561, 1515, 2575, 2575},
    {945, 6555, 23220, 54120, 87595, 87595},
    {10395, 89055, 390915, 1148595, 2462520, 3864040, 3864040},
}};

// Deformed (n,n,n) diagrams with k bottom cells kept, n <= 6.
inline constexpr ReferenceTable kBTable = {{
    {1},
    {1, 1},
    {2, 7, 7},
    {5, 38, 106, 106},
    {14, 187, 1010, 2575, 2575},
    {42, 874, 7740, 36080, 87595, 87595},
    {132, 3958, 52122, 382865, 1641680, 3864040, 3864040},
}};

}  // namespace walls::testing
