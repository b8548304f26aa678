// Regenerates src/sym2omega_table.cpp:
//   gen_sym2omega_table > src/sym2omega_table.cpp
#include <iostream>

#include "scroll/p2.hpp"

int main()
{
    using namespace scroll::p2;
    std::cout << "// Generated by tools/gen_sym2omega_table. Do not edit.\n"
              << "#include \"scroll/p2.hpp\"\n\n"
              << "namespace scroll::p2 {\n\n"
              << "// h0, h1, h2 of Sym^2 Omega(d) for d = " << kSym2OmegaTableMin << " .. " << kSym2OmegaTableMax
              << "\n"
              << "const std::array<CohTable2, kSym2OmegaTableMax - kSym2OmegaTableMin + 1> kSym2OmegaTable = {{\n";
    for (int d = kSym2OmegaTableMin; d <= kSym2OmegaTableMax; ++d) {
        const auto t = derive_sym2omega(d);
        std::cout << "    {" << t[0] << ", " << t[1] << ", " << t[2] << "},  // " << d << "\n";
    }
    std::cout << "}};\n\n}  // namespace scroll::p2\n";
}
