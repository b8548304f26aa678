#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "scroll/error.hpp"

namespace scroll {

/// The scroll X = P(O(a0) + O(a1)) over the projective plane, 0 < a0 <= a1.
class Variety {
public:
    Variety(int a0, int a1) : a0_(a0), a1_(a1)
    {
        if (a0 <= 0 || a1 < a0)
            throw InvalidVariety("variety requires 0 < a0 <= a1, got (" + std::to_string(a0) + "," +
                                 std::to_string(a1) + ")");
    }

    int a0() const noexcept { return a0_; }
    int a1() const noexcept { return a1_; }
    int c() const noexcept { return a0_ + a1_; }
    std::int64_t a0a1() const noexcept { return std::int64_t{a0_} * a1_; }
    /// H^3 = c^2 - a0 a1, the degree of X under O(1)(0).
    std::int64_t degree() const noexcept { return std::int64_t{c()} * c() - a0a1(); }

    std::string to_string() const { return "(" + std::to_string(a0_) + "," + std::to_string(a1_) + ")"; }

    friend auto operator<=>(const Variety&, const Variety&) = default;

private:
    int a0_;
    int a1_;
};

}  // namespace scroll
