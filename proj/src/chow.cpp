#include "scroll/chow.hpp"

#include "scroll/error.hpp"

namespace scroll {

ChowClass ChowClass::basis(Basis b, Rational coefficient)
{
    ChowClass x;
    x.coeffs_[b] = std::move(coefficient);
    return x;
}

ChowClass& ChowClass::operator+=(const ChowClass& other)
{
    for (std::size_t i = 0; i < kSize; ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other)
{
    for (std::size_t i = 0; i < kSize; ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

ChowClass ChowClass::graded_part(int codim) const
{
    static constexpr int kCodim[kSize] = {0, 1, 1, 2, 2, 3};
    ChowClass out;
    for (std::size_t i = 0; i < kSize; ++i)
        if (kCodim[i] == codim)
            out.coeffs_[i] = coeffs_[i];
    return out;
}

bool ChowClass::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

std::string to_string(const ChowClass& x)
{
    static const char* const kNames[ChowClass::kSize] = {"1", "h", "f", "hf", "f^2", "hf^2"};
    std::string out;
    for (std::size_t i = 0; i < ChowClass::kSize; ++i) {
        const Rational& c = x.coefficients()[i];
        if (c == 0)
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + c.str() + ")" + (i == 0 ? std::string() : std::string("*") + kNames[i]);
    }
    return out.empty() ? "0" : out;
}

ChowRing::ChowRing(const Variety& variety, std::int64_t degree_offset)
    : variety_(variety),
      c_(variety.c()),
      // h^3 = c h^2 f - a0a1 h f^2, so the offset enters through the h^2 relation
      a0a1_(Rational(variety.a0a1()) - degree_offset),
      cube_(Rational(variety.degree()) + degree_offset)
{
}

ChowClass ChowRing::normal_form(int i, int j) const
{
    if (i < 0 || j < 0)
        throw PreconditionFailed("normal_form needs nonnegative exponents");
    using B = ChowClass;
    if (j >= 3 || i + j > 3)
        return {};
    switch (i + j) {
    case 0: return B::unit();
    case 1: return B::basis(i == 1 ? B::H : B::F);
    case 2:
        if (j == 2)
            return B::basis(B::F2);
        if (j == 1)
            return B::basis(B::HF);
        // h^2 = c hf - a0a1 f^2
        return B::basis(B::HF, c_) + B::basis(B::F2, -a0a1_);
    default:
        if (j == 2)
            return B::basis(B::HF2);
        if (j == 1)
            return B::basis(B::HF2, c_);  // h^2 f = c hf^2
        return B::basis(B::HF2, cube_);
    }
}

ChowClass ChowRing::multiply(const ChowClass& x, const ChowClass& y) const
{
    static constexpr int kH[ChowClass::kSize] = {0, 1, 0, 1, 0, 1};
    static constexpr int kF[ChowClass::kSize] = {0, 0, 1, 1, 2, 2};
    ChowClass out;
    for (std::size_t p = 0; p < ChowClass::kSize; ++p) {
        if (x.coefficients()[p] == 0)
            continue;
        for (std::size_t q = 0; q < ChowClass::kSize; ++q) {
            if (y.coefficients()[q] == 0)
                continue;
            out += normal_form(kH[p] + kH[q], kF[p] + kF[q]) * (x.coefficients()[p] * y.coefficients()[q]);
        }
    }
    return out;
}

ChowClass ChowRing::power(const ChowClass& x, int n) const
{
    ChowClass out = ChowClass::unit();
    for (int k = 0; k < n; ++k)
        out = multiply(out, x);
    return out;
}

ChowClass ChowRing::exp(const ChowClass& x) const
{
    const ChowClass x2 = multiply(x, x);
    const ChowClass x3 = multiply(x2, x);
    return ChowClass::unit() + x + x2 * Rational(1, 2) + x3 * Rational(1, 6);
}

namespace {

ChowClass divisor(int a, int b)
{
    return ChowClass::basis(ChowClass::H, a) + ChowClass::basis(ChowClass::F, b);
}

}  // namespace

ChowClass ChowRing::chern_character(const Atom& atom) const
{
    const ChowClass line = exp(divisor(atom.a, atom.b));
    // pulled-back Euler sequence 0 -> Om -> O(0)(-1)^3 -> O -> 0
    const ChowClass omega = exp(divisor(0, -1)) * Rational(3) - ChowClass::unit();
    switch (atom.kind) {
    case Kind::O: return line;
    case Kind::Omega: return multiply(omega, line);
    case Kind::Sym2Omega: {
        // Om (x) Om = S2Om + O(0)(-3)
        const ChowClass sym2 = multiply(omega, omega) - exp(divisor(0, -3));
        return multiply(sym2, line);
    }
    }
    throw UnsupportedKind("chern character of unknown kind");
}

ChowClass ChowRing::chern_character(const SheafExpr& s) const
{
    ChowClass out;
    for (const auto& [atom, m] : s.terms())
        out += chern_character(atom) * Rational(m);
    return out;
}

ChowClass ChowRing::tangent_chern_character() const
{
    // relative tangent O(2)(-c) plus the pulled-back tangent of the plane, 3 exp(f) - 1
    const ChowClass relative = exp(divisor(2, -variety_.c()));
    const ChowClass base = exp(divisor(0, 1)) * Rational(3) - ChowClass::unit();
    return relative + base;
}

ChowClass ChowRing::todd_class() const
{
    const ChowClass ch = tangent_chern_character();
    const ChowClass c1 = ch.graded_part(1);
    const ChowClass c1sq = multiply(c1, c1);
    // ch_2 = (c1^2 - 2 c2) / 2
    const ChowClass c2 = c1sq * Rational(1, 2) - ch.graded_part(2);
    return ChowClass::unit() + c1 * Rational(1, 2) + (c1sq + c2) * Rational(1, 12) +
           multiply(c1, c2) * Rational(1, 24);
}

std::int64_t ChowRing::chi_hrr(const SheafExpr& s) const
{
    const Rational value = integrate(multiply(chern_character(s), todd_class()));
    if (denominator(value) != 1)
        throw NonIntegralEuler("HRR gave non-integral Euler characteristic " + value.str() + " for " + to_string(s));
    const auto num = numerator(value);
    if (num > INT64_MAX || num < INT64_MIN)
        throw OverflowError("Euler characteristic exceeds 64 bits");
    return static_cast<std::int64_t>(num);
}

ChowClass normal_form(int i, int j, const Variety& variety) { return ChowRing(variety).normal_form(i, j); }

Rational integrate(const ChowClass& x, const Variety& variety) { return ChowRing(variety).integrate(x); }

ChowClass chern_character(const SheafExpr& s, const Variety& variety)
{
    return ChowRing(variety).chern_character(s);
}

std::int64_t chi_hrr(const SheafExpr& s, const Variety& variety) { return ChowRing(variety).chi_hrr(s); }

}  // namespace scroll
