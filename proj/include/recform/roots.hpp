#pragma once

/**
 * @file roots.hpp
 * @brief Roots of the characteristic polynomial with exact multiplicities.
 *
 * Multiplicities come from the exact square-free decomposition. Each
 * square-free part is solved by Aberth-Ehrlich simultaneous iteration;
 * approximations that rationalize to an exact root are promoted to Rat,
 * the rest carry the certified bound n·|p(z)|/|p'(z)| (n = degree).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

#include "recform/complex_approx.hpp"
#include "recform/errors.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"
#include "recform/unipoly.hpp"

namespace recform {

struct RootDatum {
    std::variant<Rat, ComplexApprox> value;
    int multiplicity = 1;

    bool is_exact() const { return std::holds_alternative<Rat>(value); }
    const Rat& exact() const { return std::get<Rat>(value); }
    ComplexApprox approx() const {
        return is_exact() ? ComplexApprox::from(exact()) : std::get<ComplexApprox>(value);
    }
    bool is_real() const { return is_exact() || std::get<ComplexApprox>(value).imag() == 0.0; }
};

inline constexpr double default_root_precision = 1e-12;
inline constexpr int aberth_sweep_budget = 200;

namespace detail {

inline std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// Certified radius of a disk around z containing a root of p (p square-free, degree n).
inline double inclusion_radius(const UniPoly& p, const UniPoly& dp, std::complex<double> z) {
    ComplexApprox zc(z, 0.0);
    ComplexApprox v = p.eval(zc), dv = dp.eval(zc);
    double denom = dv.magnitude() - dv.error_bound();
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(p.degree()) * (v.magnitude() + v.error_bound()) / denom;
}

/// Aberth-Ehrlich iteration from perturbed roots of unity scaled by the Cauchy bound.
inline std::vector<std::complex<double>> aberth(const UniPoly& p, int sweeps) {
    const int n = p.degree();
    std::vector<double> c;
    const UniPoly m = p.monic();
    for (const auto& r : m.coeffs()) c.push_back(r.to_double());
    std::vector<double> dc;
    for (int i = 1; i <= n; ++i) dc.push_back(c[i] * i);

    double cauchy = 0.0;
    for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(c[i]));
    cauchy += 1.0;

    std::vector<std::complex<double>> z(n);
    for (int j = 0; j < n; ++j) {
        double angle = 2 * std::numbers::pi * j / n + 0.4;
        z[j] = std::polar(cauchy * (0.5 + 0.05 * j / n), angle);
    }
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            auto v = horner(c, z[j]);
            auto dv = horner(dc, z[j]);
            if (v == 0.0) continue;
            auto ratio = v / dv;
            std::complex<double> repulsion = 0.0;
            for (int l = 0; l < n; ++l)
                if (l != j) repulsion += 1.0 / (z[j] - z[l]);
            auto step = ratio / (1.0 - ratio * repulsion);
            z[j] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[j])));
        }
        if (worst < 1e-17) break;
    }
    // Newton polish.
    for (auto& zj : z)
        for (int it = 0; it < 3; ++it) {
            auto dv = horner(dc, zj);
            if (dv == 0.0) break;
            zj -= horner(c, zj) / dv;
        }
    return z;
}

/// Best rational approximations of x with denominators up to `max_den`.
inline std::vector<Rat> convergents(double x, long long max_den) {
    std::vector<Rat> out;
    if (!std::isfinite(x) || std::abs(x) > 1e15) return out;
    long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // h/k = current convergent
    double r = x;
    for (int i = 0; i < 40; ++i) {
        double a = std::floor(r);
        if (std::abs(a) > 1e15) break;
        long long ai = static_cast<long long>(a);
        long long h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        if (k2 > max_den) break;
        out.push_back(Rat(BigInt(std::to_string(h2)), BigInt(std::to_string(k2))));
        h1 = h0; h0 = h2; k1 = k0; k0 = k2;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return out;
}

}  // namespace detail

/// Roots of a square-free polynomial: exact rationals first, then certified approximations.
inline std::vector<std::variant<Rat, ComplexApprox>> squarefree_roots(UniPoly p, double precision) {
    std::vector<std::variant<Rat, ComplexApprox>> out;
    if (p.is_constant()) return out;

    // Promote rational roots found near the approximations.
    for (auto z : detail::aberth(p, aberth_sweep_budget)) {
        if (p.degree() <= 0) break;
        if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
        for (const Rat& cand : detail::convergents(z.real(), 10'000'000)) {
            if (p.eval(cand).is_zero()) {
                out.emplace_back(cand);
                p = p / UniPoly::linear_root(cand);
                break;
            }
        }
    }
    if (p.is_constant()) return out;
    if (p.degree() == 1) {
        out.emplace_back(-p.coeff(0) / p.coeff(1));
        return out;
    }

    const UniPoly dp = p.derivative();
    auto z = detail::aberth(p, aberth_sweep_budget);
    std::vector<ComplexApprox> approx;
    double worst = 0.0;
    for (auto zj : z) {
        double radius = detail::inclusion_radius(p, dp, zj);
        worst = std::max(worst, radius);
        approx.emplace_back(zj, radius);
    }
    if (!(worst <= precision))
        throw PrecisionError("char_roots: Aberth iteration did not reach the requested bound", worst);

    // Real coefficients: a disk meeting the real axis around a simple root holds a real
    // root; the other roots come in conjugate pairs.
    std::vector<bool> used(approx.size(), false);
    std::vector<ComplexApprox> closed;
    for (std::size_t i = 0; i < approx.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const auto& a = approx[i];
        if (std::abs(a.imag()) <= a.error_bound()) {
            closed.emplace_back(a.real(), 0.0, a.error_bound() + std::abs(a.imag()));
            continue;
        }
        std::size_t partner = i;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < approx.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(approx[j].value() - std::conj(a.value()));
            if (d < best) { best = d; partner = j; }
        }
        if (partner == i) throw PrecisionError("char_roots: unpaired non-real root", a.error_bound());
        used[partner] = true;
        double bound = std::max(a.error_bound(), approx[partner].error_bound()) + best / 2;
        std::complex<double> mid = (a.value() + std::conj(approx[partner].value())) / 2.0;
        if (mid.imag() < 0) mid = std::conj(mid);
        closed.emplace_back(mid, bound);
        closed.emplace_back(std::conj(mid), bound);
    }
    for (auto& c : closed) out.emplace_back(c);
    return out;
}

/// Distinct roots of the characteristic polynomial with multiplicities.
/// Order: real roots by increasing value, then non-real roots (positive
/// imaginary part first within a conjugate pair).
inline std::vector<RootDatum> char_roots(const RecurrenceRelation& r, double precision = default_root_precision) {
    std::vector<RootDatum> roots;
    for (const auto& [factor, mult] : squarefree_decompose(r.char_poly()))
        for (auto& v : squarefree_roots(factor, precision)) roots.push_back({v, mult});
    std::stable_sort(roots.begin(), roots.end(), [](const RootDatum& a, const RootDatum& b) {
        if (a.is_real() != b.is_real()) return a.is_real();
        auto za = a.approx().value(), zb = b.approx().value();
        if (za.real() != zb.real()) return za.real() < zb.real();
        return za.imag() > zb.imag();
    });
    return roots;
}

}  // namespace recform
