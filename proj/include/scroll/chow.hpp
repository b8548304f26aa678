#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "scroll/sheaf.hpp"
#include "scroll/variety.hpp"

namespace scroll {

using Rational = boost::multiprecision::cpp_rational;

/// A class in A(X) (x) Q in normal form on the basis {1 | h, f | hf, f^2 | hf^2}.
class ChowClass {
public:
    enum Basis : std::size_t { One, H, F, HF, F2, HF2 };
    static constexpr std::size_t kSize = 6;

    ChowClass() = default;
    static ChowClass unit() { return basis(One); }
    static ChowClass basis(Basis b, Rational coefficient = 1);

    const Rational& operator[](Basis b) const { return coeffs_[b]; }
    Rational& operator[](Basis b) { return coeffs_[b]; }
    const std::array<Rational, kSize>& coefficients() const noexcept { return coeffs_; }

    ChowClass& operator+=(const ChowClass& other);
    ChowClass& operator-=(const ChowClass& other);
    ChowClass& operator*=(const Rational& scalar);
    friend ChowClass operator+(ChowClass x, const ChowClass& y) { return x += y; }
    friend ChowClass operator-(ChowClass x, const ChowClass& y) { return x -= y; }
    friend ChowClass operator*(ChowClass x, const Rational& s) { return x *= s; }
    friend ChowClass operator*(const Rational& s, ChowClass x) { return x *= s; }

    /// Parts of codimension 0..3.
    ChowClass graded_part(int codim) const;
    bool is_zero() const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

private:
    std::array<Rational, kSize> coeffs_{};
};

std::string to_string(const ChowClass& x);

/// Z[h,f]/(f^3, h^2 - c hf + a0a1 f^2) with hf^2 the class of a point.
class ChowRing {
public:
    explicit ChowRing(const Variety& variety) : ChowRing(variety, 0) {}

    /// Shifts the value of h^3 away from c^2 - a0a1. Only for fault-injection tests.
    static ChowRing with_corrupted_degree(const Variety& variety, std::int64_t offset)
    {
        return ChowRing(variety, offset);
    }

    const Variety& variety() const noexcept { return variety_; }

    /// Reduction of h^i f^j.
    ChowClass normal_form(int i, int j) const;
    ChowClass multiply(const ChowClass& x, const ChowClass& y) const;
    ChowClass power(const ChowClass& x, int n) const;
    /// exp(x) truncated above codimension 3.
    ChowClass exp(const ChowClass& x) const;
    /// Coefficient of the point class.
    Rational integrate(const ChowClass& x) const { return x[ChowClass::HF2]; }

    ChowClass chern_character(const Atom& atom) const;
    ChowClass chern_character(const SheafExpr& s) const;
    ChowClass tangent_chern_character() const;
    ChowClass todd_class() const;
    /// Euler characteristic by Hirzebruch-Riemann-Roch; throws NonIntegralEuler.
    std::int64_t chi_hrr(const SheafExpr& s) const;

private:
    ChowRing(const Variety& variety, std::int64_t degree_offset);

    Variety variety_;
    Rational c_;
    Rational a0a1_;
    Rational cube_;  // h^3 in units of the point class
};

// Free-function forms over the default ring of a variety.
ChowClass normal_form(int i, int j, const Variety& variety);
Rational integrate(const ChowClass& x, const Variety& variety);
ChowClass chern_character(const SheafExpr& s, const Variety& variety);
std::int64_t chi_hrr(const SheafExpr& s, const Variety& variety);

}  // namespace scroll
