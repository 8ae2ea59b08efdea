#pragma once

// Seeded generators shared by the property tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <vector>

#include "recform/recform.hpp"

namespace recform::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

    /// p/q with |p| <= height, 1 <= q <= height.
    Rat rational(long long height) {
        return Rat(BigInt(std::to_string(integer(-height, height))), BigInt(std::to_string(integer(1, height))));
    }

    Rat nonzero_rational(long long height) {
        for (;;)
            if (Rat r = rational(height); !r.is_zero()) return r;
    }

    Rat value(long long height, bool integral) { return integral ? Rat(integer(-height, height)) : rational(height); }

    RecurrenceRelation relation(std::size_t k, long long height, bool integral = false) {
        std::vector<Rat> g;
        for (std::size_t i = 0; i < k; ++i) g.push_back(value(height, integral));
        while (g[0].is_zero()) g[0] = value(height, integral);
        return RecurrenceRelation(g);
    }

    RatMatrix matrix(std::size_t rows, std::size_t cols, long long height, bool integral = false) {
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = value(height, integral);
        return m;
    }

    RatMatrix invertible(std::size_t k, long long height, bool integral = false) {
        for (;;)
            if (RatMatrix m = matrix(k, k, height, integral); !det(m).is_zero()) return m;
    }

    SequenceFamily family(std::size_t k, long long height, bool integral = false) {
        return SequenceFamily(relation(k, height, integral), invertible(k, height, integral));
    }

    Sequence sequence(const RecurrenceRelation& r, long long height, bool integral = false) {
        std::vector<Rat> init;
        for (std::size_t i = 0; i < r.order(); ++i) init.push_back(value(height, integral));
        return Sequence(r, init);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Rat> rats(std::initializer_list<long long> v) {
    std::vector<Rat> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

inline SequenceFamily family_of(std::initializer_list<long long> gammas, std::vector<std::vector<Rat>> rows) {
    return SequenceFamily(RecurrenceRelation(rats(gammas)), RatMatrix::from_rows(rows));
}

/// Dense coefficients of a form in term order.
inline std::vector<Rat> dense_coeffs(const HomogeneousForm& f) {
    std::vector<Rat> out;
    for (const auto& e : monomials(f.arity(), f.degree())) out.push_back(f.coeff(e));
    return out;
}

/// Form with the given dense coefficients.
inline HomogeneousForm form_of(std::size_t arity, unsigned degree, const std::vector<Rat>& coeffs) {
    HomogeneousForm f(arity, degree);
    auto mons = monomials(arity, degree);
    for (std::size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], coeffs.at(i));
    return f;
}

/// The bundled problems as families.
inline std::vector<std::pair<std::string, SequenceFamily>> golden_families() {
    std::vector<std::pair<std::string, SequenceFamily>> out;
    for (const auto& [name, text] : golden_problems()) out.emplace_back(name, parse_problem(text).family());
    return out;
}

}  // namespace recform::testing
