#pragma once

/**
 * @file form.hpp
 * @brief Sparse homogeneous multivariate forms.
 *
 * Terms are keyed by exponent vectors and kept in graded lexicographic
 * order with x1 > x2 > ... > xk, which for a fixed degree is plain
 * descending lex: x^3, x^2 y, x^2 z, x y^2, x y z, ... Zero coefficients are
 * never stored.
 */

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recform/complex_approx.hpp"
#include "recform/errors.hpp"
#include "recform/rat.hpp"

namespace recform {

using Exponent = std::vector<unsigned>;

/// All exponent vectors of `arity` variables summing to `degree`, in term order.
inline std::vector<Exponent> monomials(std::size_t arity, unsigned degree) {
    std::vector<Exponent> out;
    Exponent e(arity, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == arity) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (unsigned v = left + 1; v-- > 0;) {
            e[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (arity == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(0, degree);
    return out;
}

template <typename T>
class Form {
public:
    using Terms = std::map<Exponent, T, std::greater<>>;

    Form() = default;
    Form(std::size_t arity, unsigned degree) : arity_(arity), degree_(degree) {}

    static Form constant(std::size_t arity, const T& c) {
        Form f(arity, 0);
        f.add_term(Exponent(arity, 0), c);
        return f;
    }

    /// Degree-one form sum_i coeffs[i]·x_i.
    static Form linear(std::span<const T> coeffs) {
        Form f(coeffs.size(), 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponent e(coeffs.size(), 0);
            e[i] = 1;
            f.add_term(e, coeffs[i]);
        }
        return f;
    }
    static Form linear(const std::vector<T>& coeffs) { return linear(std::span<const T>(coeffs)); }

    std::size_t arity() const { return arity_; }
    unsigned degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    T coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }

    /// Adds c·x^e; the exponent must match arity and degree.
    void add_term(const Exponent& e, const T& c) {
        if (e.size() != arity_) throw DimensionError("Form: exponent arity mismatch");
        unsigned total = 0;
        for (auto v : e) total += v;
        if (total != degree_) throw DimensionError("Form: exponent degree mismatch");
        if (recform::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (recform::is_zero(it->second)) terms_.erase(it);
        }
    }

    template <typename P>
    auto eval(std::span<const P> point) const {
        if (point.size() != arity_) throw DimensionError("Form: evaluation point has wrong length");
        using R = std::conditional_t<std::is_same_v<T, Rat> && std::is_same_v<P, Rat>, Rat, ComplexApprox>;
        R acc(0);
        for (const auto& [e, c] : terms_) {
            R term = lift<R>(c);
            for (std::size_t i = 0; i < arity_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) term = term * lift<R>(point[i]);
            acc = acc + term;
        }
        return acc;
    }
    template <typename P>
    auto eval(const std::vector<P>& point) const { return eval(std::span<const P>(point)); }

    friend Form operator+(Form a, const Form& b) {
        a.require_compatible(b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend Form operator-(Form a, const Form& b) {
        a.require_compatible(b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend Form operator*(const T& k, const Form& f) {
        Form out(f.arity_, f.degree_);
        for (const auto& [e, c] : f.terms_) out.add_term(e, k * c);
        return out;
    }
    friend Form operator*(const Form& a, const Form& b) {
        if (a.arity_ != b.arity_) throw DimensionError("Form: product arity mismatch");
        Form out(a.arity_, a.degree_ + b.degree_);
        Exponent e(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const Form& a, const Form& b) {
        return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Coefficients for every monomial of the form's degree, zeros included.
    std::vector<std::pair<Exponent, T>> dense() const {
        std::vector<std::pair<Exponent, T>> out;
        for (auto& e : monomials(arity_, degree_)) out.emplace_back(e, coeff(e));
        return out;
    }

    /// Rendering such as "-187·x1³ + 159·x1²·x2"; zero terms shown when `dense`.
    std::string str(bool dense_listing = false) const {
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const Exponent& e, const T& c) {
            std::string coeff;
            if constexpr (std::is_same_v<T, Rat>) {
                if (!first) os << (c.sign() < 0 ? " - " : " + ");
                else if (c.sign() < 0) os << "-";
                coeff = abs(c).str();
            } else {
                if (!first) os << " + ";
                coeff = "(" + c.str() + ")";
            }
            first = false;
            os << coeff << monomial_str(e);
        };
        if (dense_listing) {
            for (auto& [e, c] : dense()) emit(e, c);
        } else {
            for (const auto& [e, c] : terms_) emit(e, c);
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.str(); }

    static std::string monomial_str(const Exponent& e) {
        static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "·x" + std::to_string(i + 1);
            if (e[i] > 1) {
                for (char ch : std::to_string(e[i])) out += sup[ch - '0'];
            }
        }
        return out;
    }

private:
    template <typename R, typename V>
    static R lift(const V& v) {
        if constexpr (std::is_same_v<R, V>) return v;
        else return ComplexApprox::from(v);
    }

    void require_compatible(const Form& b) const {
        if (arity_ != b.arity_ || degree_ != b.degree_) throw DimensionError("Form: incompatible arity or degree");
    }

    std::size_t arity_ = 0;
    unsigned degree_ = 0;
    Terms terms_;
};

using HomogeneousForm = Form<Rat>;
using ApproxForm = Form<ComplexApprox>;

inline ApproxForm to_approx(const HomogeneousForm& f) {
    ApproxForm out(f.arity(), f.degree());
    for (const auto& [e, c] : f.terms()) out.add_term(e, ComplexApprox::from(c));
    return out;
}

/// Expands prod_i (a_i · x)^{m_i}.
template <typename T>
Form<T> expand_product(const std::vector<std::pair<std::vector<T>, unsigned>>& factors) {
    if (factors.empty()) throw DimensionError("expand_product: no factors");
    const std::size_t arity = factors.front().first.size();
    std::size_t total = 0;
    for (const auto& f : factors) total += f.second;
    if (total != arity) throw DimensionError("expand_product: multiplicities must sum to the arity");
    Form<T> acc = Form<T>::constant(arity, T(1));
    for (const auto& [coeffs, mult] : factors) {
        if (coeffs.size() != arity) throw DimensionError("expand_product: factor length mismatch");
        Form<T> lin = Form<T>::linear(coeffs);
        for (unsigned m = 0; m < mult; ++m) acc = acc * lin;
    }
    return acc;
}

}  // namespace recform
