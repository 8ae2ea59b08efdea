#pragma once

/**
 * @file complex_approx.hpp
 * @brief Complex floating value with a tracked absolute error bound.
 *
 * The bound covers both the propagated input error and the rounding of the
 * operation itself, so `contains(exact)` is a certified inclusion test.
 */

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "recform/errors.hpp"
#include "recform/rat.hpp"

namespace recform {

class ComplexApprox {
public:
    static constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

    ComplexApprox() = default;
    ComplexApprox(double re, double im = 0.0, double bound = 0.0) : v_(re, im), err_(bound) {}
    ComplexApprox(std::complex<double> v, double bound) : v_(v), err_(bound) {}

    /// Nearest double, with the conversion error included in the bound.
    static ComplexApprox from(const Rat& r) {
        double d = r.to_double();
        double bound = 2 * unit_roundoff * std::abs(d) + std::numeric_limits<double>::denorm_min();
        if (r.is_zero()) bound = 0.0;
        return ComplexApprox(d, 0.0, bound);
    }

    double real() const { return v_.real(); }
    double imag() const { return v_.imag(); }
    double error_bound() const { return err_; }
    std::complex<double> value() const { return v_; }
    double magnitude() const { return std::abs(v_); }

    /// True when the exact value may be zero.
    bool contains_zero() const { return std::abs(v_) <= err_; }

    bool contains(std::complex<double> exact) const { return std::abs(v_ - exact) <= err_; }

    ComplexApprox conj() const { return ComplexApprox(std::conj(v_), err_); }

    ComplexApprox operator-() const { return ComplexApprox(-v_, err_); }

    friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
        auto s = a.v_ + b.v_;
        return ComplexApprox(s, a.err_ + b.err_ + 2 * unit_roundoff * std::abs(s));
    }
    friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) { return a + (-b); }

    friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
        double ma = std::abs(a.v_), mb = std::abs(b.v_);
        auto p = a.v_ * b.v_;
        return ComplexApprox(p, ma * b.err_ + mb * a.err_ + a.err_ * b.err_ + 4 * unit_roundoff * ma * mb);
    }

    friend ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
        double mb = std::abs(b.v_);
        if (mb <= b.err_) throw DomainError("ComplexApprox: divisor interval contains zero");
        auto q = a.v_ / b.v_;
        double mq = std::abs(q);
        return ComplexApprox(q, (a.err_ + mq * b.err_) / (mb - b.err_) + 8 * unit_roundoff * mq);
    }

    ComplexApprox& operator+=(const ComplexApprox& o) { return *this = *this + o; }
    ComplexApprox& operator-=(const ComplexApprox& o) { return *this = *this - o; }
    ComplexApprox& operator*=(const ComplexApprox& o) { return *this = *this * o; }
    ComplexApprox& operator/=(const ComplexApprox& o) { return *this = *this / o; }

    /// Bitwise identity of value and bound; not a mathematical comparison.
    friend bool operator==(const ComplexApprox& a, const ComplexApprox& b) {
        return a.v_ == b.v_ && a.err_ == b.err_;
    }

    std::string str(int digits = 12) const {
        std::ostringstream os;
        os.precision(digits);
        os << v_.real();
        if (v_.imag() != 0.0) os << (v_.imag() < 0 ? " - " : " + ") << std::abs(v_.imag()) << "i";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexApprox& c) {
        return os << c.str() << " ±" << c.err_;
    }

private:
    std::complex<double> v_{0.0, 0.0};
    double err_ = 0.0;
};

inline bool is_zero(const ComplexApprox& c) {
    return c.real() == 0.0 && c.imag() == 0.0 && c.error_bound() == 0.0;
}

inline ComplexApprox pow(const ComplexApprox& base, unsigned exp) {
    ComplexApprox r(1.0);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace recform
