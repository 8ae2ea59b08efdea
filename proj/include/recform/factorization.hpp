#pragma once

/**
 * @file factorization.hpp
 * @brief Complete factorization of F into linear forms.
 *
 * For distinct roots alpha_i of multiplicity m_i the sequences
 * S^(i,j)_n = n^j·alpha_i^n form a basis of the solution space. Their
 * initial matrix G_S satisfies G_S* = B·G_S with B block lower triangular,
 * so det(M_S^n) = prod_i (alpha_i^n)^{m_i}. Writing alpha_i^n = a_i·g_n with
 * a_i = (1, alpha_i, ..., alpha_i^{k-1})·G^{-1} gives
 *
 *     F(x) = prod_i (a_i · x)^{m_i}.
 *
 * Rows a_i are exact when alpha_i is rational and ComplexApprox otherwise;
 * the expanded product is certified against the exact F.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "recform/complex_approx.hpp"
#include "recform/errors.hpp"
#include "recform/form.hpp"
#include "recform/form_builder.hpp"
#include "recform/matrix.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"
#include "recform/roots.hpp"

namespace recform {

inline constexpr double default_certification_tolerance = 1e-9;

struct LinearFactor {
    std::variant<std::vector<Rat>, std::vector<ComplexApprox>> coefficients;
    unsigned multiplicity = 1;
    RootDatum source_root;

    bool is_exact() const { return std::holds_alternative<std::vector<Rat>>(coefficients); }
    const std::vector<Rat>& exact() const { return std::get<std::vector<Rat>>(coefficients); }
    std::vector<ComplexApprox> approx() const {
        if (!is_exact()) return std::get<std::vector<ComplexApprox>>(coefficients);
        std::vector<ComplexApprox> out;
        for (const auto& c : exact()) out.push_back(ComplexApprox::from(c));
        return out;
    }
};

struct Decomposition {
    std::vector<LinearFactor> factors;
    double residual = 0.0;           // max |coefficient of the expanded product - coefficient of target|
    double relative_residual = 0.0;  // same, each term divided by max(1, |target coefficient|)
    Rat scale{1};                    // the product reproduces scale·F

    bool is_exact() const {
        return std::all_of(factors.begin(), factors.end(), [](const LinearFactor& f) { return f.is_exact(); });
    }
};

namespace detail {

inline Rat binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rat(r);
}

template <typename T>
T root_as(const RootDatum& r) {
    if constexpr (std::is_same_v<T, Rat>) return r.exact();
    else return r.approx();
}

inline bool all_exact(const std::vector<RootDatum>& roots) {
    return std::all_of(roots.begin(), roots.end(), [](const RootDatum& r) { return r.is_exact(); });
}

/// (1, alpha, ..., alpha^{k-1}).
template <typename T>
std::vector<T> power_row(const T& alpha, std::size_t k) {
    std::vector<T> row{T(1)};
    while (row.size() < k) row.push_back(row.back() * alpha);
    return row;
}

struct Deviation {
    double absolute = 0.0;
    double relative = 0.0;
};

/// Expands the factors and compares with the target. Exact factors must match
/// exactly; approximate ones within tolerance·max(1, |c|) per coefficient.
inline Deviation certify(const std::vector<LinearFactor>& factors, const HomogeneousForm& target, double tolerance) {
    bool exact = std::all_of(factors.begin(), factors.end(), [](const LinearFactor& f) { return f.is_exact(); });
    if (exact) {
        std::vector<std::pair<std::vector<Rat>, unsigned>> in;
        for (const auto& f : factors) in.emplace_back(f.exact(), f.multiplicity);
        if (expand_product(in) != target)
            throw CertificationError("decomposition: exact product differs from the form", 1.0);
        return {};
    }
    std::vector<std::pair<std::vector<ComplexApprox>, unsigned>> in;
    for (const auto& f : factors) in.emplace_back(f.approx(), f.multiplicity);
    ApproxForm product = expand_product(in);
    Deviation dev;
    for (const auto& e : monomials(target.arity(), target.degree())) {
        Rat exact_c = target.coeff(e);
        double diff = std::abs(product.coeff(e).value() - std::complex<double>(exact_c.to_double(), 0.0));
        double rel = diff / std::max(1.0, std::abs(exact_c.to_double()));
        dev.absolute = std::max(dev.absolute, diff);
        dev.relative = std::max(dev.relative, rel);
    }
    if (dev.relative > tolerance)
        throw CertificationError("decomposition: coefficient deviates beyond tolerance", dev.absolute);
    return dev;
}

inline void record(Decomposition& d, Deviation dev) {
    d.residual = dev.absolute;
    d.relative_residual = dev.relative;
}

}  // namespace detail

/// Stripe i holds the rows (n^j·alpha_i^n)_{n = shift..shift+k-1}, j = 0..m_i-1.
/// shift = 0 gives G_S, shift = 1 gives G_S*.
template <typename T = ComplexApprox>
Matrix<T> special_basis_matrix(const std::vector<RootDatum>& roots, std::size_t shift = 0) {
    std::size_t k = 0;
    for (const auto& r : roots) k += static_cast<std::size_t>(r.multiplicity);
    Matrix<T> gs(k, k);
    std::size_t row = 0;
    for (const auto& r : roots) {
        const T alpha = detail::root_as<T>(r);
        for (int j = 0; j < r.multiplicity; ++j, ++row) {
            for (std::size_t col = 0; col < k; ++col) {
                const std::size_t n = col + shift;
                T value(1);
                for (int p = 0; p < j; ++p) value *= T(static_cast<double>(n));
                for (std::size_t p = 0; p < n; ++p) value *= alpha;
                gs(row, col) = value;
            }
        }
    }
    return gs;
}

template <>
inline Matrix<Rat> special_basis_matrix<Rat>(const std::vector<RootDatum>& roots, std::size_t shift) {
    std::size_t k = 0;
    for (const auto& r : roots) k += static_cast<std::size_t>(r.multiplicity);
    RatMatrix gs(k, k);
    std::size_t row = 0;
    for (const auto& r : roots) {
        const Rat& alpha = r.exact();
        for (int j = 0; j < r.multiplicity; ++j, ++row)
            for (std::size_t col = 0; col < k; ++col) {
                const long n = static_cast<long>(col + shift);
                gs(row, col) = pow(Rat(n), j) * pow(alpha, n);
            }
    }
    return gs;
}

/// Block-diagonal B with lower-triangular blocks b_{u,v} = C(u, v)·alpha_i.
template <typename T = ComplexApprox>
Matrix<T> block_matrix_b(const std::vector<RootDatum>& roots) {
    std::size_t k = 0;
    for (const auto& r : roots) k += static_cast<std::size_t>(r.multiplicity);
    Matrix<T> b(k, k);
    std::size_t offset = 0;
    for (const auto& r : roots) {
        const T alpha = detail::root_as<T>(r);
        const auto m = static_cast<unsigned>(r.multiplicity);
        for (unsigned u = 0; u < m; ++u)
            for (unsigned v = 0; v <= u; ++v) {
                if constexpr (std::is_same_v<T, Rat>) b(offset + u, offset + v) = detail::binomial(u, v) * alpha;
                else b(offset + u, offset + v) = ComplexApprox::from(detail::binomial(u, v)) * alpha;
            }
        offset += m;
    }
    return b;
}

/// Factor rows a_i = (1, alpha_i, ..., alpha_i^{k-1})·G^{-1}, certified against build_form(f).form_f.
inline Decomposition decompose_form(const SequenceFamily& f, double precision = default_root_precision,
                                    double tolerance = default_certification_tolerance) {
    f.require_independent();
    const std::size_t k = f.order();
    const RatMatrix g_inv = inverse(f.initial_matrix());
    ApproxMatrix g_inv_approx(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g_inv_approx(i, j) = ComplexApprox::from(g_inv(i, j));

    Decomposition d;
    for (const auto& root : char_roots(f.relation(), precision)) {
        LinearFactor factor;
        factor.multiplicity = static_cast<unsigned>(root.multiplicity);
        factor.source_root = root;
        if (root.is_exact()) {
            auto s = detail::power_row(root.exact(), k);
            factor.coefficients = std::span<const Rat>(s) * g_inv;
        } else {
            auto s = detail::power_row(root.approx(), k);
            factor.coefficients = std::span<const ComplexApprox>(s) * g_inv_approx;
        }
        d.factors.push_back(std::move(factor));
    }
    detail::record(d, detail::certify(d.factors, build_form(f).form_f, tolerance));
    return d;
}

/// Family with G = I: the rows a_i are (1, alpha_i, ..., alpha_i^{k-1}) themselves.
inline Decomposition orthonormal_factorization(const RecurrenceRelation& r, const std::vector<RootDatum>& roots,
                                               double tolerance = default_certification_tolerance) {
    const std::size_t k = r.order();
    Decomposition d;
    for (const auto& root : roots) {
        LinearFactor factor;
        factor.multiplicity = static_cast<unsigned>(root.multiplicity);
        factor.source_root = root;
        if (root.is_exact()) factor.coefficients = detail::power_row(root.exact(), k);
        else factor.coefficients = detail::power_row(root.approx(), k);
        d.factors.push_back(std::move(factor));
    }
    SequenceFamily identity_family(r, RatMatrix::identity(k));
    detail::record(d, detail::certify(d.factors, build_form(identity_family).form_f, tolerance));
    return d;
}

}  // namespace recform
