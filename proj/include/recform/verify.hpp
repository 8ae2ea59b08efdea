#pragma once

/**
 * @file verify.hpp
 * @brief Exact identity checks, integer solution streams and the form-fitting oracle.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "recform/errors.hpp"
#include "recform/form.hpp"
#include "recform/form_builder.hpp"
#include "recform/matrix.hpp"
#include "recform/rat.hpp"
#include "recform/recurrence.hpp"

namespace recform {

struct VerificationFailure {
    long long n;
    Rat lhs;
    Rat rhs;
    bool scaled;  // true: F~(g_n) vs Delta^k·delta^n; false: F(g_n) vs delta^n
};

struct VerificationReport {
    long long first = 0;
    long long last = 0;
    std::vector<VerificationFailure> failures;
    std::chrono::nanoseconds elapsed{0};

    bool ok() const { return failures.empty(); }
    std::size_t count() const { return last >= first ? static_cast<std::size_t>(last - first + 1) : 0; }
    std::size_t passed() const {
        std::vector<long long> bad;
        for (const auto& f : failures) bad.push_back(f.n);
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        return count() - bad.size();
    }

    /// Reports over adjacent ranges combine into one.
    friend VerificationReport merge(VerificationReport a, const VerificationReport& b) {
        if (a.count() == 0) return b;
        if (b.count() == 0) return a;
        a.first = std::min(a.first, b.first);
        a.last = std::max(a.last, b.last);
        a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
        std::sort(a.failures.begin(), a.failures.end(),
                  [](const VerificationFailure& x, const VerificationFailure& y) { return x.n < y.n; });
        a.elapsed += b.elapsed;
        return a;
    }
};

/// Checks F(g_n) = delta^n and F~(g_n) = Delta^k·delta^n exactly for n in [first, last].
inline VerificationReport verify_identity(const SequenceFamily& f, const FormPackage& pkg, long long first,
                                          long long last) {
    if (pkg.arity != f.order()) throw DimensionError("verify_identity: package arity differs from family order");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.first = first;
    report.last = last;
    const Rat scale = pkg.rhs_scale();
    for (long long n = first; n <= last; ++n) {
        const auto point = f.eval(n);
        const Rat power = pow(pkg.base, n);
        Rat lhs = pkg.form_f.eval(point);
        if (lhs != power) report.failures.push_back({n, lhs, power, false});
        Rat lhs_tilde = pkg.form_f_tilde.eval(point);
        Rat rhs_tilde = scale * power;
        if (lhs_tilde != rhs_tilde) report.failures.push_back({n, lhs_tilde, rhs_tilde, true});
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

struct DiophantineSolution {
    long long n;
    std::vector<BigInt> point;
    BigInt rhs;  // Delta^k·delta^n
};

/// Calls `sink` with (G_n^(1), ..., G_n^(k); Delta^k·delta^n) for each n in [first, last],
/// after asserting F~(point) = rhs. Requires an integral family; negative n is
/// accepted only while the terms and right-hand side stay integral.
inline void for_each_diophantine_solution(const SequenceFamily& f, const FormPackage& pkg, long long first,
                                          long long last, const std::function<void(const DiophantineSolution&)>& sink) {
    if (!f.is_integral()) throw DomainError("diophantine_solutions: relation and initial values must be integers");
    const Rat scale = pkg.rhs_scale();
    for (long long n = first; n <= last; ++n) {
        const auto point = f.eval(n);
        const Rat rhs = scale * pow(pkg.base, n);
        if (!rhs.is_integer() || !std::all_of(point.begin(), point.end(), [](const Rat& r) { return r.is_integer(); }))
            throw DomainError("diophantine_solutions: non-integral terms at n = " + std::to_string(n));
        if (pkg.form_f_tilde.eval(point) != rhs)
            throw CertificationError("diophantine_solutions: F~(point) != rhs at n = " + std::to_string(n));
        DiophantineSolution s{n, {}, rhs.numerator()};
        for (const auto& p : point) s.point.push_back(p.numerator());
        sink(s);
    }
}

inline std::vector<DiophantineSolution> diophantine_solutions(const SequenceFamily& f, long long first,
                                                              long long last) {
    const FormPackage pkg = build_form(f);
    std::vector<DiophantineSolution> out;
    for_each_diophantine_solution(f, pkg, first, last, [&](const DiophantineSolution& s) { out.push_back(s); });
    return out;
}

inline std::size_t binomial_count(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Fits the unique degree-k form with form(g_n) = delta^n from samples alone.
/// A rank-deficient sample is extended with the following integers; if the
/// system stays rank-deficient an UnderdeterminedError is raised.
inline HomogeneousForm oracle_fit_form(const SequenceFamily& f, std::vector<long long> sample_ns,
                                       std::size_t max_extension = 64) {
    f.require_independent();
    const std::size_t k = f.order();
    const Rat base = f.relation().base();
    const auto mons = monomials(k, static_cast<unsigned>(k));
    const std::size_t unknowns = mons.size();
    std::sort(sample_ns.begin(), sample_ns.end());
    sample_ns.erase(std::unique(sample_ns.begin(), sample_ns.end()), sample_ns.end());

    auto row_for = [&](long long n) {
        const auto point = f.eval(n);
        std::vector<Rat> row;
        for (const auto& e : mons) {
            Rat v(1);
            for (std::size_t u = 0; u < k; ++u) v *= pow(point[u], e[u]);
            row.push_back(v);
        }
        row.push_back(pow(base, n));
        return row;
    };

    std::vector<std::vector<Rat>> rows;
    for (long long n : sample_ns) rows.push_back(row_for(n));
    long long next = sample_ns.empty() ? 0 : sample_ns.back() + 1;
    std::size_t extended = 0;
    for (;;) {
        RatMatrix aug = RatMatrix::from_rows(rows.empty() ? std::vector<std::vector<Rat>>{} : rows);
        std::size_t r = 0;
        if (!rows.empty()) {
            RatMatrix coeffs(aug.rows(), unknowns);
            for (std::size_t i = 0; i < aug.rows(); ++i)
                for (std::size_t j = 0; j < unknowns; ++j) coeffs(i, j) = aug(i, j);
            r = rank(coeffs);
        }
        if (r == unknowns) {
            auto pivots = rref(aug);
            if (!pivots.empty() && pivots.back() == unknowns)
                throw CertificationError("oracle_fit_form: samples admit no form with form(g_n) = delta^n");
            HomogeneousForm out(k, static_cast<unsigned>(k));
            for (std::size_t i = 0; i < unknowns; ++i) out.add_term(mons[i], aug(i, unknowns));
            return out;
        }
        if (extended >= max_extension)
            throw UnderdeterminedError("oracle_fit_form: sample system has rank " + std::to_string(r) + " < " +
                                           std::to_string(unknowns) + " unknowns",
                                       r, unknowns);
        rows.push_back(row_for(next++));
        ++extended;
    }
}

}  // namespace recform
