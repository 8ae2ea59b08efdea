#pragma once

/**
 * @file recurrence.hpp
 * @brief Recurrence relations, two-sided sequences and sequence families.
 *
 * A relation of order k is G_{n+k} = gamma_{k-1} G_{n+k-1} + ... + gamma_0 G_n
 * with gamma_0 != 0, so every sequence extends uniquely to negative indices.
 *
 * A SequenceFamily stores its k sequences as the ROWS of the k×k initial
 * matrix g: g(i, j) = G_j of sequence i. The column j of g is the vector
 * g_j = (G_j^(1), ..., G_j^(k)).
 */

#include <cstddef>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recform/errors.hpp"
#include "recform/matrix.hpp"
#include "recform/rat.hpp"
#include "recform/unipoly.hpp"

namespace recform {

class RecurrenceRelation {
public:
    /// `gammas` = (gamma_0, ..., gamma_{k-1}).
    explicit RecurrenceRelation(std::vector<Rat> gammas) : gammas_(std::move(gammas)) {
        if (gammas_.size() < 2) throw DomainError("RecurrenceRelation: order must be at least 2");
        if (gammas_.front().is_zero()) throw DomainError("RecurrenceRelation: gamma_0 must be nonzero");
    }

    std::size_t order() const { return gammas_.size(); }
    const std::vector<Rat>& gammas() const { return gammas_; }
    const Rat& gamma(std::size_t i) const { return gammas_.at(i); }

    /// x^k - gamma_{k-1} x^{k-1} - ... - gamma_0
    UniPoly char_poly() const {
        std::vector<Rat> c;
        for (const auto& g : gammas_) c.push_back(-g);
        c.push_back(Rat(1));
        return UniPoly(std::move(c));
    }

    /// delta = (-1)^{k+1} gamma_0 = det of the step matrix.
    Rat base() const { return order() % 2 == 1 ? gammas_[0] : -gammas_[0]; }

    friend bool operator==(const RecurrenceRelation&, const RecurrenceRelation&) = default;

private:
    std::vector<Rat> gammas_;
};

/// One two-sided sequence. Copies share a memo of computed terms; the memo
/// is guarded by a mutex so concurrent evaluation behaves as if serialized.
class Sequence {
public:
    Sequence(RecurrenceRelation relation, std::vector<Rat> initials)
        : relation_(std::move(relation)), cache_(std::make_shared<Cache>()) {
        if (initials.size() != relation_.order())
            throw DimensionError("Sequence: need exactly k initial values");
        cache_->forward = std::move(initials);
    }

    const RecurrenceRelation& relation() const { return relation_; }
    std::size_t order() const { return relation_.order(); }

    std::vector<Rat> initials() const {
        std::lock_guard lock(cache_->mu);
        return {cache_->forward.begin(), cache_->forward.begin() + order()};
    }

    /// G_n for any integer n.
    Rat operator()(long long n) const { return at(n); }

    Rat at(long long n) const {
        std::lock_guard lock(cache_->mu);
        const std::size_t k = order();
        const auto& g = relation_.gammas();
        auto& fwd = cache_->forward;
        auto& bwd = cache_->backward;  // bwd[i] = G_{-(i+1)}
        if (n >= 0) {
            while (fwd.size() <= static_cast<std::size_t>(n)) {
                std::size_t m = fwd.size();
                Rat next(0);
                for (std::size_t j = 0; j < k; ++j) next += g[j] * fwd[m - k + j];
                fwd.push_back(std::move(next));
            }
            return fwd[n];
        }
        const std::size_t want = static_cast<std::size_t>(-(n + 1));
        auto term = [&](long long idx) -> const Rat& {
            return idx >= 0 ? fwd[idx] : bwd[static_cast<std::size_t>(-(idx + 1))];
        };
        while (bwd.size() <= want) {
            long long m = -static_cast<long long>(bwd.size()) - 1;  // index being filled
            // G_m = (G_{m+k} - sum_{j=1}^{k-1} gamma_j G_{m+j}) / gamma_0
            Rat acc = term(m + static_cast<long long>(k));
            for (std::size_t j = 1; j < k; ++j) acc -= g[j] * term(m + static_cast<long long>(j));
            bwd.push_back(acc / g[0]);
        }
        return bwd[want];
    }

private:
    struct Cache {
        std::mutex mu;
        std::vector<Rat> forward;
        std::vector<Rat> backward;
    };

    RecurrenceRelation relation_;
    std::shared_ptr<Cache> cache_;
};

class SequenceFamily {
public:
    SequenceFamily(RecurrenceRelation relation, RatMatrix g) : relation_(std::move(relation)), g_(std::move(g)) {
        const std::size_t k = relation_.order();
        if (g_.rows() != k || g_.cols() != k)
            throw DimensionError("SequenceFamily: initial matrix must be k×k");
        for (std::size_t i = 0; i < k; ++i) sequences_.emplace_back(relation_, g_.row_vector(i));
    }

    const RecurrenceRelation& relation() const { return relation_; }
    std::size_t order() const { return relation_.order(); }
    const RatMatrix& initial_matrix() const { return g_; }
    const Sequence& sequence(std::size_t i) const { return sequences_.at(i); }

    /// Delta = det(g).
    Rat delta() const { return det(g_); }

    /// Throws DependentInitialsError when det(g) = 0, naming the rows of a
    /// linear relation among the sequences.
    void require_independent(const std::string& what = "sequence family") const {
        auto dep = kernel_vector(g_.transpose());
        if (!dep) return;
        std::vector<std::size_t> rows;
        std::ostringstream os;
        os << what << ": initial vectors are linearly dependent (Δ = 0); relation";
        for (std::size_t i = 0; i < dep->size(); ++i) {
            if ((*dep)[i].is_zero()) continue;
            rows.push_back(i);
            os << (rows.size() == 1 ? " " : " + ") << "(" << (*dep)[i] << ")·row" << (i + 1);
        }
        os << " = 0";
        throw DependentInitialsError(os.str(), std::move(rows));
    }

    /// g_n = (G_n^(1), ..., G_n^(k)).
    std::vector<Rat> eval(long long n) const {
        std::vector<Rat> v;
        v.reserve(order());
        for (const auto& s : sequences_) v.push_back(s.at(n));
        return v;
    }

    /// Matrix whose columns are g_n, ..., g_{n+k-1}; (g itself at n = 0, G* at n = 1).
    RatMatrix window(long long n) const {
        const std::size_t k = order();
        RatMatrix w(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) w(i, j) = sequences_[i].at(n + static_cast<long long>(j));
        return w;
    }

    bool is_integral() const {
        for (const auto& g : relation_.gammas())
            if (!g.is_integer()) return false;
        for (std::size_t i = 0; i < g_.rows(); ++i)
            for (std::size_t j = 0; j < g_.cols(); ++j)
                if (!g_(i, j).is_integer()) return false;
        return true;
    }

private:
    RecurrenceRelation relation_;
    RatMatrix g_;
    std::vector<Sequence> sequences_;
};

inline Rat seq_eval(const Sequence& s, long long n) { return s.at(n); }

inline std::vector<Rat> family_eval(const SequenceFamily& f, long long n) { return f.eval(n); }

/// Subdiagonal ones, last column (gamma_0, ..., gamma_{k-1}); satisfies G* = G·T.
inline RatMatrix companion_matrix(const RecurrenceRelation& r) {
    const std::size_t k = r.order();
    RatMatrix t(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) t(i + 1, i) = Rat(1);
    for (std::size_t i = 0; i < k; ++i) t(i, k - 1) = r.gamma(i);
    return t;
}

/// M = G*·G^{-1}, the unique matrix with g_{n+1} = M·g_n.
inline RatMatrix step_matrix(const SequenceFamily& f) {
    f.require_independent();
    return f.window(1) * inverse(f.initial_matrix());
}

/// For k = 2 with rule x_n = A x_{n-1} + B x_{n-2}: initials (2G_1 - A G_0, A G_1 + 2B G_0).
inline Sequence associated_sequence(const Sequence& s) {
    if (s.order() != 2) throw DimensionError("associated_sequence: only defined for order 2");
    const Rat& a = s.relation().gamma(1);
    const Rat& b = s.relation().gamma(0);
    Rat g0 = s.at(0), g1 = s.at(1);
    return Sequence(s.relation(), {Rat(2) * g1 - a * g0, a * g1 + Rat(2) * b * g0});
}

/// Row j holds the initials of the shifted sequence (G_{n+j}).
inline SequenceFamily shifted_family(const Sequence& s) {
    const std::size_t k = s.order();
    RatMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g(i, j) = s.at(static_cast<long long>(i + j));
    return SequenceFamily(s.relation(), std::move(g));
}

}  // namespace recform
