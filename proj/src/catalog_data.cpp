#include "catalog_data.hpp"

namespace torus::detail {

// Literal lattice-vector table for the laminated family: regime indices
// (k=1,2 and k>=3 columns; 0 = absent) followed by the 8-vector. The first
// row's last entry is a placeholder for ceil(k/2). Validated at load time by
// checksum and in tests against independent enumeration.
const RawRow kCatalog[120] = {
    {1, 1, {0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 2, {0, 0, 0, 0, 0, 0, 1, 0}},
    {3, 3, {0, 0, 0, 0, 0, 0, 1, 1}},
    {4, 4, {0, 0, 0, 0, 0, 1, 0, 0}},
    {5, 5, {0, 0, 0, 0, 0, 1, 1, 0}},
    {6, 6, {0, 0, 0, 0, 0, 1, 1, 1}},
    {7, 7, {0, 0, 0, 0, 1, 0, 0, 0}},
    {8, 8, {0, 0, 0, 0, 1, 0, -1, 0}},
    {9, 9, {0, 0, 0, 0, 1, -1, -1, 0}},
    {10, 10, {0, 0, 0, 0, 1, 0, -1, -1}},
    {11, 11, {0, 0, 0, 0, 1, -1, -1, -1}},
    {12, 0, {0, 0, 0, 0, 1, -1, -2, -1}},
    {13, 12, {0, 0, 0, 1, 0, 0, 0, 0}},
    {14, 13, {0, 0, 0, 1, 0, -1, 0, 0}},
    {15, 14, {0, 0, 0, 1, 1, -1, 0, 0}},
    {16, 15, {0, 0, 0, 1, 1, 0, 0, 0}},
    {17, 16, {0, 0, 0, 1, 0, 0, 1, 1}},
    {18, 17, {0, 0, 0, 1, 0, 0, 1, 0}},
    {19, 18, {0, 0, 0, 1, 1, -1, -1, -1}},
    {20, 19, {0, 0, 0, 1, 1, -1, -1, 0}},
    {21, 20, {0, 0, 1, 0, 0, 0, 0, 0}},
    {22, 21, {0, 0, 1, -1, -1, 1, 0, 0}},
    {23, 22, {0, 0, 1, 0, -1, 0, 0, 0}},
    {24, 23, {0, 0, 1, -1, -1, 0, 0, 0}},
    {25, 24, {0, 0, 1, 0, -1, 0, 1, 1}},
    {26, 25, {0, 0, 1, 0, -1, 0, 1, 0}},
    {27, 26, {0, 0, 1, 0, -1, 1, 1, 1}},
    {28, 27, {0, 0, 1, -1, -1, 1, 1, 1}},
    {29, 28, {0, 0, 1, 0, -1, 1, 1, 0}},
    {30, 29, {0, 0, 1, -1, -1, 1, 1, 0}},
    {31, 30, {0, 0, 1, -1, -2, 1, 1, 1}},
    {32, 31, {0, 0, 1, -1, -2, 1, 1, 0}},
    {33, 0, {0, 0, 1, -1, -2, 2, 2, 1}},
    {34, 0, {0, 0, 1, 0, -1, 1, 2, 1}},
    {35, 0, {0, 0, 1, 0, -2, 1, 2, 1}},
    {36, 0, {0, 0, 1, -1, -2, 1, 2, 1}},
    {37, 32, {0, 1, 0, 0, 0, 0, 0, 0}},
    {38, 33, {0, 1, 0, 0, 0, -1, -1, 0}},
    {39, 34, {0, 1, 0, 0, 0, 0, -1, 0}},
    {40, 35, {0, 1, 0, -1, 0, 0, -1, 0}},
    {41, 36, {0, 1, 0, 0, 1, 0, -1, 0}},
    {42, 37, {0, 1, -1, 0, 1, 0, -1, 0}},
    {43, 38, {0, 1, 0, 0, 1, -1, -1, 0}},
    {44, 39, {0, 1, -1, 0, 1, -1, -1, 0}},
    {45, 40, {0, 1, 0, 1, 1, -1, -1, 0}},
    {46, 41, {0, 1, -1, 1, 1, -1, -1, 0}},
    {47, 42, {0, 1, -1, 1, 2, -1, -1, 0}},
    {48, 43, {0, 1, 0, 0, 1, -1, -2, 0}},
    {49, 44, {0, 1, -1, 0, 1, -1, -2, 0}},
    {50, 45, {0, 1, 0, 0, 1, -1, -2, -1}},
    {51, 46, {0, 1, -1, 0, 1, -1, -2, -1}},
    {52, 47, {0, 1, -1, 1, 2, -2, -2, 0}},
    {53, 48, {0, 1, -1, 1, 2, -2, -2, -1}},
    {54, 49, {0, 1, 0, 0, 0, 0, 0, 1}},
    {55, 50, {0, 1, -1, 0, 2, -1, -2, 0}},
    {56, 51, {0, 1, -1, 1, 2, -1, -2, 0}},
    {57, 52, {0, 1, -1, 0, 2, -1, -2, -1}},
    {58, 53, {0, 1, -1, 1, 2, -1, -2, -1}},
    {59, 0, {0, 1, -2, 1, 3, -2, -3, -1}},
    {60, 0, {0, 1, -1, 1, 2, -2, -3, -1}},
    {61, 0, {0, 1, -1, 0, 2, -2, -3, -1}},
    {62, 0, {0, 1, -1, 0, 2, -1, -3, -1}},
    {63, 0, {0, 1, -1, 1, 3, -2, -3, -1}},
    {64, 54, {1, 0, 0, 0, 0, 0, 0, 0}},
    {65, 55, {1, 0, 0, -1, -1, 0, -1, 0}},
    {66, 56, {1, 0, 0, 0, 0, -1, -1, 0}},
    {67, 57, {1, 1, -1, 0, 1, -1, -2, 0}},
    {68, 58, {1, 0, 0, 0, 0, 0, -1, 0}},
    {69, 59, {1, 0, 0, -1, 0, 0, -1, 0}},
    {70, 60, {1, 0, -1, 0, 0, -1, -1, 0}},
    {71, 61, {1, -1, 0, -1, -1, 1, 0, 0}},
    {72, 62, {1, -1, 0, 0, -1, 0, 0, 0}},
    {73, 63, {1, -1, 0, -1, -1, 0, 0, 0}},
    {74, 64, {1, 0, -1, 0, 0, 0, -1, 0}},
    {75, 65, {1, 0, -1, -1, 0, 0, -1, 0}},
    {76, 66, {1, -1, -1, 0, 0, 0, 0, 0}},
    {77, 67, {1, -1, 0, 0, 0, 0, 0, 0}},
    {78, 68, {1, 0, -1, 0, 1, 0, -1, 0}},
    {79, 69, {1, 0, -1, 0, 1, -1, -1, 0}},
    {80, 70, {1, 0, -1, 1, 1, -1, -1, 0}},
    {81, 71, {1, -1, 0, -1, -2, 1, 1, 0}},
    {82, 72, {1, -1, 0, 0, -1, 0, 1, 0}},
    {83, 73, {1, -1, 0, 0, -1, 0, 1, 1}},
    {84, 74, {1, 0, -1, 0, 1, -1, -2, -1}},
    {85, 75, {1, 0, -1, 0, 1, -1, -2, 0}},
    {86, 76, {1, -1, 0, 0, -1, 1, 1, 0}},
    {87, 77, {1, -1, 0, -1, -1, 1, 1, 0}},
    {88, 78, {1, -1, 0, 0, -1, 1, 1, 1}},
    {89, 79, {1, -1, 0, -1, -1, 1, 1, 1}},
    {90, 80, {1, 0, 0, -1, -1, 1, 0, 0}},
    {91, 81, {1, -1, 0, -1, -2, 1, 1, 1}},
    {92, 82, {1, 0, 0, 0, -1, 0, 0, 0}},
    {93, 83, {1, 0, 0, -1, -1, 0, 0, 0}},
    {94, 84, {1, 0, 0, 0, 0, 0, 0, 1}},
    {95, 85, {1, 0, -1, 0, 0, 0, 0, 0}},
    {96, 86, {1, 0, 0, -1, -1, 1, 0, 1}},
    {97, 87, {1, 0, 0, 0, -1, 0, 0, 1}},
    {98, 88, {1, 0, 0, -1, -1, 0, 0, 1}},
    {99, 89, {1, 0, -1, 0, 0, 0, 0, 1}},
    {100, 90, {1, -1, 1, -1, -2, 1, 1, 0}},
    {101, 91, {1, -1, 1, -1, -2, 1, 1, 1}},
    {102, 0, {1, -1, 0, 0, -1, 1, 2, 1}},
    {103, 0, {1, -1, 1, -1, -3, 2, 2, 1}},
    {104, 0, {1, -1, 1, -2, -3, 2, 2, 1}},
    {105, 0, {1, -1, 0, 0, -2, 1, 2, 1}},
    {106, 0, {1, 0, 1, -1, -2, 1, 1, 1}},
    {107, 0, {1, -1, 0, -1, -2, 2, 2, 1}},
    {108, 0, {1, 0, 0, 0, -1, 0, 1, 1}},
    {109, 0, {1, -1, 1, 0, -2, 1, 2, 1}},
    {110, 0, {1, 0, 0, -1, -2, 1, 1, 1}},
    {111, 0, {1, 0, 0, -1, -1, 1, 1, 1}},
    {112, 0, {1, -1, 1, -1, -3, 2, 3, 1}},
    {113, 0, {1, -2, 1, -1, -3, 2, 3, 1}},
    {114, 0, {1, -1, 1, -1, -3, 2, 3, 2}},
    {115, 0, {1, -1, 1, -1, -2, 2, 2, 1}},
    {116, 0, {1, -1, 1, -1, -3, 1, 2, 1}},
    {117, 0, {1, 0, 0, 0, -1, 1, 1, 1}},
    {118, 0, {1, -1, 0, -1, -2, 1, 2, 1}},
    {119, 0, {1, -1, 1, -1, -2, 1, 2, 1}},
    {120, 0, {2, -1, 0, -1, -2, 1, 1, 1}},
};

// k>=3 indices whose coefficient is b_{k,d}.
const int kRedK3[36] = {4,  7,  12, 13, 14, 15, 20, 21, 22, 23, 33, 34,
                      35, 36, 37, 38, 39, 40, 41, 42, 55, 56, 57, 58,
                      59, 60, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70};

// k>=3 indices of the vectors whose outer products certify spanning.
const int kSpanK3[36] = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 12, 13,
                       14, 16, 17, 20, 21, 22, 23, 24, 25, 32, 33, 34,
                       35, 36, 37, 49, 54, 56, 64, 66, 67, 82, 83, 84};

// Row index (0-based) at which each dimension's block starts, d = 1..8,
// in the k=1,2 ordering.
const int kDimStart[8] = {0, 1, 3, 6, 12, 20, 36, 63};

}  // namespace torus::detail
