#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tempo {

// Exact nonnegative rational, used for r-MTC edge weights. Parsed from
// decimal notation, so denominators are powers of ten before reduction.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ <= 0) throw std::invalid_argument("Rational: denominator must be positive");
        if (num_ < 0) throw std::invalid_argument("Rational: negative value");
        reduce();
    }

    static Rational parse_decimal(const std::string& text) {
        // Accepts "12", "0.25", ".5", "3." -- plain decimal, no exponent.
        std::size_t i = 0;
        std::int64_t whole = 0, frac = 0, scale = 1;
        bool any_digit = false;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            whole = checked_mul(whole, 10) + (text[i] - '0');
            any_digit = true;
        }
        if (i < text.size() && text[i] == '.') {
            ++i;
            for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
                frac = checked_mul(frac, 10) + (text[i] - '0');
                scale = checked_mul(scale, 10);
                any_digit = true;
            }
        }
        if (!any_digit || i != text.size())
            throw std::invalid_argument("Rational: bad decimal literal '" + text + "'");
        return Rational(checked_mul(whole, scale) + frac, scale);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational& operator+=(const Rational& o) {
        const std::int64_t g = std::gcd(den_, o.den_);
        const std::int64_t lhs_mul = o.den_ / g;
        num_ = checked_mul(num_, lhs_mul) + checked_mul(o.num_, den_ / g);
        den_ = checked_mul(den_, lhs_mul);
        reduce();
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Exact decimal rendering; denominators reduce from 10^k, so 2^a*5^b.
    std::string to_decimal_string() const {
        std::int64_t two = 0, five = 0, dd = den_;
        while (dd % 2 == 0) { dd /= 2; ++two; }
        while (dd % 5 == 0) { dd /= 5; ++five; }
        if (dd != 1) throw std::logic_error("Rational: not representable as finite decimal");
        std::int64_t digits = two > five ? two : five;
        std::int64_t mul = 1;
        for (std::int64_t k = 0; k < digits; ++k) mul = checked_mul(mul, 10);
        std::int64_t scaled = checked_mul(num_, mul / den_);
        if (digits == 0) return std::to_string(scaled);
        std::string s = std::to_string(scaled);
        while (static_cast<std::int64_t>(s.size()) <= digits) s.insert(s.begin(), '0');
        s.insert(s.size() - digits, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
        return s;
    }

private:
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        const __int128 p = static_cast<__int128>(a) * b;
        if (p > INT64_MAX || p < 0) throw std::overflow_error("Rational: overflow");
        return static_cast<std::int64_t>(p);
    }
    void reduce() {
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace tempo
