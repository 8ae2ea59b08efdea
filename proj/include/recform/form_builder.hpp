#pragma once

/**
 * @file form_builder.hpp
 * @brief The degree-k form F with F(g_n) = delta^n, built two independent ways.
 *
 * build_form: every entry of M^n is a fixed linear combination
 * sum_u c[i][j][u]·G_n^(u) of the family terms (coefficients from the linear
 * systems on the initial values of the entry sequences), so det(M^n) is a
 * form of degree k in the terms.
 *
 * build_form_via_companion: G·T^n has columns g_n, ..., g_{n+k-1} and
 * g_{n+j} = M^j·g_n, so det(G·T^n)/Delta = det(M^n) is again such a form.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "recform/errors.hpp"
#include "recform/form.hpp"
#include "recform/matrix.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"

namespace recform {

struct FormPackage {
    HomogeneousForm form_f;        // F(g_n) = delta^n
    HomogeneousForm form_f_tilde;  // Delta^k · F
    Rat delta;                     // Delta = det(G)
    Rat base;                      // delta = (-1)^{k+1} gamma_0
    std::size_t arity = 0;

    /// Delta^k, the constant on the right of F~(x) = Delta^k · delta^n.
    Rat rhs_scale() const { return pow(delta, static_cast<long long>(arity)); }

    friend bool operator==(const FormPackage&, const FormPackage&) = default;
};

/// c[i][j][u]: entry (i,j) of M^n equals sum_u c[i][j][u]·G_n^(u).
class CoefficientTensor {
public:
    explicit CoefficientTensor(std::size_t k) : k_(k), c_(k * k * k, Rat(0)) {}

    std::size_t order() const { return k_; }
    Rat& operator()(std::size_t i, std::size_t j, std::size_t u) { return c_[(i * k_ + j) * k_ + u]; }
    const Rat& operator()(std::size_t i, std::size_t j, std::size_t u) const { return c_[(i * k_ + j) * k_ + u]; }

    std::vector<Rat> slice(std::size_t i, std::size_t j) const {
        return {c_.begin() + static_cast<std::ptrdiff_t>((i * k_ + j) * k_),
                c_.begin() + static_cast<std::ptrdiff_t>((i * k_ + j + 1) * k_)};
    }

private:
    std::size_t k_;
    std::vector<Rat> c_;
};

namespace detail {

// Cofactor expansion along rows with memoised minors keyed by the set of
// remaining columns; 2^k distinct minors instead of k! products.
inline HomogeneousForm symbolic_det(const std::vector<std::vector<HomogeneousForm>>& entries) {
    const std::size_t k = entries.size();
    if (k == 0 || k > 20) throw DimensionError("symbolic_det: unsupported size");
    const std::size_t arity = entries[0][0].arity();
    std::map<std::uint32_t, HomogeneousForm> memo;
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> HomogeneousForm {
        if (row == k) return HomogeneousForm::constant(arity, Rat(1));
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        HomogeneousForm acc(arity, static_cast<unsigned>(k - row));
        int position = 0;
        for (std::size_t c = 0; c < k; ++c) {
            if (!(cols & (1u << c))) continue;
            const auto& entry = entries[row][c];
            if (!entry.is_zero()) {
                HomogeneousForm term = entry * self(self, row + 1, cols & ~(1u << c));
                acc = (position % 2 == 0) ? acc + term : acc - term;
            }
            ++position;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, 0, (1u << k) - 1);
}

inline std::vector<RatMatrix> powers(const RatMatrix& m, std::size_t count) {
    std::vector<RatMatrix> p{RatMatrix::identity(m.rows())};
    while (p.size() < count) p.push_back(p.back() * m);
    return p;
}

inline FormPackage package(const SequenceFamily& f, HomogeneousForm form_f, const RatMatrix& m) {
    FormPackage pkg;
    pkg.arity = f.order();
    pkg.delta = f.delta();
    pkg.base = f.relation().base();
    if (det(m) != pkg.base)
        throw CertificationError("form builder: det(M) differs from (-1)^{k+1}·gamma_0");
    pkg.form_f_tilde = pkg.rhs_scale() * form_f;
    pkg.form_f = std::move(form_f);
    return pkg;
}

}  // namespace detail

/// Solves the k^2 systems m_ij = sum_u c[i][j][u]·r_u against the rows r_u of G,
/// with m_ij = (M^0(i,j), ..., M^{k-1}(i,j)).
inline CoefficientTensor linear_coefficients(const SequenceFamily& f) {
    const RatMatrix m = step_matrix(f);
    const std::size_t k = f.order();
    const auto p = detail::powers(m, k);
    RatMatrix rhs(k, k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t n = 0; n < k; ++n) rhs(n, i * k + j) = p[n](i, j);
    const RatMatrix sol = solve(f.initial_matrix().transpose(), rhs);
    CoefficientTensor c(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t u = 0; u < k; ++u) c(i, j, u) = sol(u, i * k + j);
    return c;
}

inline FormPackage build_form(const SequenceFamily& f) {
    f.require_independent();
    const std::size_t k = f.order();
    const CoefficientTensor c = linear_coefficients(f);
    std::vector<std::vector<HomogeneousForm>> entries(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) entries[i].push_back(HomogeneousForm::linear(c.slice(i, j)));
    return detail::package(f, detail::symbolic_det(entries), step_matrix(f));
}

inline FormPackage build_form_via_companion(const SequenceFamily& f) {
    f.require_independent();
    const std::size_t k = f.order();
    const RatMatrix m = step_matrix(f);
    const auto p = detail::powers(m, k);
    // Entry (i, j) of G·T^n is G_{n+j}^(i) = (M^j g_n)_i.
    std::vector<std::vector<HomogeneousForm>> entries(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) entries[i].push_back(HomogeneousForm::linear(p[j].row_vector(i)));
    HomogeneousForm f_form = (Rat(1) / f.delta()) * detail::symbolic_det(entries);
    return detail::package(f, std::move(f_form), m);
}

/// The form of the family made of one sequence and its k-1 shifts.
inline FormPackage cassini_form(const Sequence& s) {
    SequenceFamily f = shifted_family(s);
    f.require_independent("shifted family (G_n, ..., G_{n+k-1})");
    return build_form(f);
}

}  // namespace recform
