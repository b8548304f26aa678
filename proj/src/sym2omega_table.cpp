// Generated by tools/gen_sym2omega_table. Do not edit.
#include "scroll/p2.hpp"

namespace scroll::p2 {

// h0, h1, h2 of Sym^2 Omega(d) for d = -12 .. 15
const std::array<CohTable2, kSym2OmegaTableMax - kSym2OmegaTableMin + 1> kSym2OmegaTable = {{
    {0, 0, 270},  // -12
    {0, 0, 231},  // -11
    {0, 0, 195},  // -10
    {0, 0, 162},  // -9
    {0, 0, 132},  // -8
    {0, 0, 105},  // -7
    {0, 0, 81},  // -6
    {0, 0, 60},  // -5
    {0, 0, 42},  // -4
    {0, 0, 27},  // -3
    {0, 0, 15},  // -2
    {0, 0, 6},  // -1
    {0, 0, 0},  // 0
    {0, 3, 0},  // 1
    {0, 3, 0},  // 2
    {0, 0, 0},  // 3
    {6, 0, 0},  // 4
    {15, 0, 0},  // 5
    {27, 0, 0},  // 6
    {42, 0, 0},  // 7
    {60, 0, 0},  // 8
    {81, 0, 0},  // 9
    {105, 0, 0},  // 10
    {132, 0, 0},  // 11
    {162, 0, 0},  // 12
    {195, 0, 0},  // 13
    {231, 0, 0},  // 14
    {270, 0, 0},  // 15
}};

}  // namespace scroll::p2
