#pragma once

/**
 * @file rat.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every Rat is kept in canonical form: gcd(num, den) = 1, den > 0 and
 * zero is 0/1. Equality is therefore a structural comparison.
 *
 * Text format is "p/q", or "p" when the denominator is one.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "recform/errors.hpp"

namespace recform {

using BigInt = mpz_class;

class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(v) {}                                            // NOLINT
    Rat(long v) : v_(v) {}                                           // NOLINT
    Rat(long long v) : v_(BigInt(std::to_string(v))) {}              // NOLINT
    Rat(unsigned long v) : v_(v) {}                                  // NOLINT
    Rat(const BigInt& v) : v_(v) {}                                  // NOLINT
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p", "p/q", optional leading sign on either part.
    static Rat parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto slash = text.find('/');
        auto num = parse_int(trim(text.substr(0, slash)), text);
        if (slash == std::string_view::npos) return Rat(num);
        auto den = parse_int(trim(text.substr(slash + 1)), text);
        if (den == 0) throw DomainError("Rat: zero denominator in \"" + std::string(text) + "\"");
        return Rat(num, den);
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat operator-() const { return from(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DomainError("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    const mpq_class& raw() const { return v_; }

private:
    static Rat from(mpq_class v) {
        Rat r;
        r.v_ = std::move(v);
        return r;
    }

    static BigInt parse_int(std::string_view s, std::string_view whole) {
        std::string digits(s);
        if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
        bool ok = !digits.empty();
        for (std::size_t i = 0; ok && i < digits.size(); ++i) {
            char c = digits[i];
            ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && digits.size() > 1);
        }
        if (!ok) throw DomainError("Rat: cannot parse \"" + std::string(whole) + "\"");
        return BigInt(digits, 10);
    }

    mpq_class v_{0};
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// Integer power; negative exponents invert (base must then be nonzero).
inline Rat pow(const Rat& base, long long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw DomainError("Rat: zero to a negative power");
        return pow(Rat(1) / base, -exp);
    }
    Rat result(1), b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

inline bool is_zero(const Rat& r) { return r.is_zero(); }

}  // namespace recform
