#include <cctype>
#include <climits>
#include <cstdint>
#include <optional>

#include "scroll/error.hpp"
#include "scroll/sheaf.hpp"

namespace scroll {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    template <class Sum, class AtomFn>
    Sum parse_sum(int arity, AtomFn make_atom)
    {
        Sum out;
        do {
            skip_ws();
            int multiplicity = 1;
            if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
                const std::size_t at = pos_;
                multiplicity = parse_int();
                expect('*');
                if (multiplicity <= 0)
                    throw ParseError("multiplicity must be positive", at);
            }
            skip_ws();
            const Kind kind = parse_kind();
            expect('(');
            const int first = parse_int();
            int second = 0;
            if (arity == 2) {
                expect(',');
                second = parse_int();
            }
            expect(')');
            out += make_atom(kind, first, second, multiplicity);
            skip_ws();
        } while (accept('+'));
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return out;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            if (pos_ >= text_.size())
                throw ParseError(std::string("expected '") + ch + "' but input ended", pos_);
            throw ParseError(std::string("expected '") + ch + "'", pos_);
        }
    }

    int parse_int()
    {
        skip_ws();
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer", start);
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > INT_MAX)
                throw ParseError("integer out of range", start);
            ++pos_;
        }
        return static_cast<int>(negative ? -value : value);
    }

    Kind parse_kind()
    {
        const std::size_t start = pos_;
        // longest match first
        if (text_.substr(pos_, 4) == "S2Om") {
            pos_ += 4;
            return Kind::Sym2Omega;
        }
        if (text_.substr(pos_, 2) == "Om") {
            pos_ += 2;
            return Kind::Omega;
        }
        if (text_.substr(pos_, 1) == "O") {
            pos_ += 1;
            return Kind::O;
        }
        throw ParseError("expected one of O, Om, S2Om", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SheafExpr parse_sheaf(std::string_view text)
{
    return Parser(text).parse_sum<SheafExpr>(2, [](Kind k, int a, int b, int m) { return SheafExpr({k, a, b}, m); });
}

p2::Sum parse_plane_sum(std::string_view text)
{
    return Parser(text).parse_sum<p2::Sum>(1, [](Kind k, int d, int, int m) { return p2::Sum({k, d}, m); });
}

}  // namespace scroll
