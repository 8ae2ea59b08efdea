#pragma once

/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials with rational coefficients.
 *
 * Coefficients are stored from the constant term upward and trimmed so the
 * leading coefficient is nonzero; the zero polynomial has no coefficients
 * and degree -1.
 */

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recform/complex_approx.hpp"
#include "recform/errors.hpp"
#include "recform/matrix.hpp"
#include "recform/rat.hpp"

namespace recform {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }
    static UniPoly x() { return UniPoly{Rat(0), Rat(1)}; }
    /// x - r
    static UniPoly linear_root(const Rat& r) { return UniPoly{-r, Rat(1)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        UniPoly m = *this;
        Rat lc = leading();
        for (auto& c : m.c_) c /= lc;
        return m;
    }

    UniPoly derivative() const {
        std::vector<Rat> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
        return UniPoly(std::move(d));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    ComplexApprox eval(const ComplexApprox& z) const {
        ComplexApprox acc(0.0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + ComplexApprox::from(*it);
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> s(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) s[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) s[i] += b.c_[i];
        return UniPoly(std::move(s));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b * Rat(-1); }
    friend UniPoly operator*(const UniPoly& a, const Rat& k) {
        std::vector<Rat> s = a.c_;
        for (auto& c : s) c *= k;
        return UniPoly(std::move(s));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> p(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(p));
    }

    /// Euclidean division: a = q·b + r with deg r < deg b.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw DomainError("UniPoly: division by the zero polynomial");
        std::vector<Rat> rem = a.c_;
        if (a.degree() < b.degree()) return {UniPoly{}, a};
        std::vector<Rat> q(a.c_.size() - b.c_.size() + 1, Rat(0));
        const Rat lc = b.leading();
        for (int d = a.degree(); d >= b.degree(); --d) {
            Rat f = rem[d] / lc;
            if (f.is_zero()) continue;
            std::size_t shift = d - b.degree();
            q[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Text form in x, highest degree first, e.g. "x^3 - x^2 - 1".
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            const Rat& c = c_[d];
            if (c.is_zero()) continue;
            Rat mag = abs(c);
            if (first) os << (c.sign() < 0 ? "-" : "");
            else os << (c.sign() < 0 ? " - " : " + ");
            first = false;
            bool unit = mag == Rat(1);
            if (!unit || d == 0) os << mag;
            if (d > 0) os << (unit ? "" : "*") << var;
            if (d > 1) os << '^' << d;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Monic greatest common divisor (zero when both inputs are zero).
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct SquarefreeFactor {
    UniPoly factor;  // monic, square-free
    int multiplicity;
};

/// Yun's algorithm. The product of factor^multiplicity times p.leading()
/// reproduces p; factors are pairwise coprime and multiplicities increase.
inline std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree_decompose: zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;
    UniPoly a = p.monic();
    UniPoly b = a.derivative();
    UniPoly c = gcd(a, b);
    UniPoly w = a / c;
    UniPoly y = b / c;
    UniPoly z = y - w.derivative();
    for (int i = 1; !w.is_constant(); ++i) {
        UniPoly g = gcd(w, z);
        if (!g.is_constant()) out.push_back({g, i});
        w = w / g;
        y = z / g;
        z = y - w.derivative();
    }
    return out;
}

/// det(xI - m) by the Faddeev-LeVerrier recursion (exact over the rationals).
inline UniPoly characteristic_polynomial(const RatMatrix& m) {
    m.require_square("characteristic_polynomial");
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(1);
    RatMatrix aux(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        aux = m * aux;
        for (std::size_t i = 0; i < n; ++i) aux(i, i) += c[n - k + 1];
        RatMatrix prod = m * aux;
        Rat trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
        c[n - k] = -trace / Rat(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

}  // namespace recform
