#pragma once

/**
 * @file binary.hpp
 * @brief Closed forms for two sequences of one second-order rule x_n = A x_{n-1} + B x_{n-2}.
 *
 *     C_H·G_n^2 + C_GH·G_n·H_n + C_G·H_n^2 = (-B)^n·Delta^2
 *
 * with C_G = G_1^2 - A G_0 G_1 - B G_0^2 (C_H likewise), C_GH = -(E10 + E01)
 * and Delta = G_0 H_1 - G_1 H_0. The left side splits as
 * ((H_1 - a H_0) x - (G_1 - a G_0) y)·((H_1 - b H_0) x - (G_1 - b G_0) y)
 * over the roots a, b of x^2 - A x - B.
 *
 * Everything here is computed from the initial values directly, without
 * going through form_builder, so it doubles as an independent check at k = 2.
 */

#include <string>
#include <utility>
#include <vector>

#include "recform/errors.hpp"
#include "recform/factorization.hpp"
#include "recform/form.hpp"
#include "recform/form_builder.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"
#include "recform/roots.hpp"

namespace recform {

struct BinaryInvariants {
    Rat c_g, c_h, c_gh, e10, e01, delta, discriminant;
};

namespace detail {

inline void require_binary_pair(const Sequence& g, const Sequence& h) {
    if (g.order() != 2 || h.order() != 2) throw DimensionError("binary: sequences must have order 2");
    if (!(g.relation() == h.relation())) throw DomainError("binary: sequences follow different rules");
}

inline Rat binary_c(const Sequence& s) {
    const Rat& a = s.relation().gamma(1);
    const Rat& b = s.relation().gamma(0);
    Rat s0 = s.at(0), s1 = s.at(1);
    return s1 * s1 - a * s0 * s1 - b * s0 * s0;
}

}  // namespace detail

inline BinaryInvariants binary_invariants(const Sequence& g, const Sequence& h) {
    detail::require_binary_pair(g, h);
    const Rat& a = g.relation().gamma(1);
    const Rat& b = g.relation().gamma(0);
    Rat g0 = g.at(0), g1 = g.at(1), h0 = h.at(0), h1 = h.at(1);
    BinaryInvariants inv;
    inv.c_g = detail::binary_c(g);
    inv.c_h = detail::binary_c(h);
    inv.e10 = g1 * h1 - a * g1 * h0 - b * g0 * h0;
    inv.e01 = g1 * h1 - a * g0 * h1 - b * g0 * h0;
    inv.c_gh = -(inv.e10 + inv.e01);
    inv.delta = g0 * h1 - g1 * h0;
    inv.discriminant = a * a + Rat(4) * b;
    return inv;
}

inline FormPackage binary_form(const Sequence& g, const Sequence& h) {
    const BinaryInvariants inv = binary_invariants(g, h);
    if (inv.delta.is_zero())
        throw DependentInitialsError("binary_form: G and H are linearly dependent (Δ = 0)", {0, 1});
    FormPackage pkg;
    pkg.arity = 2;
    pkg.delta = inv.delta;
    pkg.base = -g.relation().gamma(0);
    pkg.form_f_tilde = HomogeneousForm(2, 2);
    pkg.form_f_tilde.add_term({2, 0}, inv.c_h);
    pkg.form_f_tilde.add_term({1, 1}, inv.c_gh);
    pkg.form_f_tilde.add_term({0, 2}, inv.c_g);
    pkg.form_f = (Rat(1) / (inv.delta * inv.delta)) * pkg.form_f_tilde;
    return pkg;
}

/// The two factors of F~ (not F): scale of the result is Delta^2.
inline Decomposition binary_decomposition(const Sequence& g, const Sequence& h,
                                          double precision = default_root_precision,
                                          double tolerance = default_certification_tolerance) {
    const FormPackage pkg = binary_form(g, h);
    Rat g0 = g.at(0), g1 = g.at(1), h0 = h.at(0), h1 = h.at(1);
    Decomposition d;
    d.scale = pkg.delta * pkg.delta;
    for (const auto& root : char_roots(g.relation(), precision)) {
        LinearFactor factor;
        factor.multiplicity = static_cast<unsigned>(root.multiplicity);
        factor.source_root = root;
        if (root.is_exact()) {
            const Rat& r = root.exact();
            factor.coefficients = std::vector<Rat>{h1 - r * h0, -(g1 - r * g0)};
        } else {
            auto r = root.approx();
            auto c = [](const Rat& v) { return ComplexApprox::from(v); };
            factor.coefficients = std::vector<ComplexApprox>{c(h1) - r * c(h0), -(c(g1) - r * c(g0))};
        }
        d.factors.push_back(std::move(factor));
    }
    detail::record(d, detail::certify(d.factors, pkg.form_f_tilde, tolerance));
    return d;
}

/// C_GH through the associated sequences: (G0·Ĥ1 - G1·Ĥ0, H0·Ĝ1 - H1·Ĝ0).
inline std::pair<Rat, Rat> c_gh_alternatives(const Sequence& g, const Sequence& h) {
    detail::require_binary_pair(g, h);
    const Sequence g_hat = associated_sequence(g), h_hat = associated_sequence(h);
    return {g.at(0) * h_hat.at(1) - g.at(1) * h_hat.at(0), h.at(0) * g_hat.at(1) - h.at(1) * g_hat.at(0)};
}

struct IdentityFailure {
    std::string identity;
    long long n;
    Rat lhs;
    Rat rhs;
};

struct IdentityReport {
    long long first = 0;
    long long last = 0;
    std::size_t checks = 0;
    std::vector<IdentityFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks, for every n in [first, last]:
///   Gen1:  Ĝ_n^2 - D·G_n^2 = 4·C_G·(-B)^n
///   Gen2:  G_{n+1}^2 - A·G_n·G_{n+1} - B·G_n^2 = C_G·(-B)^n
///   jan13: G_{n-1}·G_{n+1} - G_n^2 = -C_G·(-B)^{n-1}
///   Gen2 = B·jan13 term by term
/// plus the associated-pair facts C_Ĝ = -D·C_G, C_{GĜ} = 0, Delta(G, Ĝ) = -2·C_G
/// and the two alternative expressions of C_GH for the pair (G, Ĝ).
inline IdentityReport classical_identity_suite(const Sequence& g, long long first, long long last) {
    if (g.order() != 2) throw DimensionError("classical_identity_suite: order must be 2");
    const Rat& a = g.relation().gamma(1);
    const Rat& b = g.relation().gamma(0);
    const Sequence hat = associated_sequence(g);
    const BinaryInvariants pair = binary_invariants(g, hat);
    const Rat& c_g = pair.c_g;
    const Rat& d = pair.discriminant;

    IdentityReport report{first, last, 0, {}};
    auto check = [&](const char* name, long long n, const Rat& lhs, const Rat& rhs) {
        ++report.checks;
        if (lhs != rhs) report.failures.push_back({name, n, lhs, rhs});
    };

    check("C_Ghat = -D·C_G", 0, pair.c_h, -d * c_g);
    check("C_(G,Ghat) = 0", 0, pair.c_gh, Rat(0));
    check("Delta(G,Ghat) = -2·C_G", 0, pair.delta, Rat(-2) * c_g);
    auto [via_h, via_g] = c_gh_alternatives(g, hat);
    check("C_GH = G0·Ĥ1 - G1·Ĥ0", 0, pair.c_gh, via_h);
    check("C_GH = H0·Ĝ1 - H1·Ĝ0", 0, pair.c_gh, via_g);

    const Rat minus_b = -b;
    for (long long n = first; n <= last; ++n) {
        Rat gm = g.at(n - 1), gn = g.at(n), gp = g.at(n + 1), hn = hat.at(n);
        check("Gen1", n, hn * hn - d * gn * gn, Rat(4) * c_g * pow(minus_b, n));
        Rat gen2 = gp * gp - a * gn * gp - b * gn * gn;
        check("Gen2", n, gen2, c_g * pow(minus_b, n));
        Rat jan13 = gm * gp - gn * gn;
        check("jan13", n, jan13, -c_g * pow(minus_b, n - 1));
        check("Gen2 = B·jan13", n, gen2, b * jan13);
    }
    return report;
}

}  // namespace recform
