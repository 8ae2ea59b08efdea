#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over Rat or ComplexApprox.
 *
 * Determinants of rational matrices use fraction-free Bareiss elimination;
 * inverse and solve use Gauss-Jordan over the field. The approximate
 * instantiation uses partial pivoting by magnitude.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "recform/complex_approx.hpp"
#include "recform/errors.hpp"
#include "recform/rat.hpp"

namespace recform {

namespace detail {

inline double pivot_score(const Rat& r) { return r.is_zero() ? 0.0 : 1.0; }
inline double pivot_score(const ComplexApprox& c) { return c.magnitude(); }

// Rationals take the first nonzero entry; approximations the largest one.
template <typename T>
std::optional<std::size_t> choose_pivot(auto&& column_entry, std::size_t from, std::size_t to) {
    std::optional<std::size_t> best;
    double best_score = 0.0;
    for (std::size_t i = from; i < to; ++i) {
        double s = pivot_score(column_entry(i));
        if (s > best_score) {
            best = i;
            best_score = s;
            if constexpr (std::is_same_v<T, Rat>) break;
        }
    }
    return best;
}

}  // namespace detail

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw DimensionError("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vector(std::size_t i) const { auto r = row(i); return {r.begin(), r.end()}; }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Matrix: product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const T& ail = a(i, l);
                if (is_zero(ail)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += ail * b(l, j);
            }
        return p;
    }

    friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
        if (a.cols_ != v.size()) throw DimensionError("Matrix: vector length mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        return a * std::span<const T>(v);
    }

    /// Row vector times matrix.
    friend std::vector<T> operator*(std::span<const T> v, const Matrix& a) {
        if (a.rows_ != v.size()) throw DimensionError("Matrix: vector length mismatch");
        std::vector<T> out(a.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[j] += v[i] * a(i, j);
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Matrix: sum shape mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
        return s;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Matrix: difference shape mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
        return s;
    }
    friend Matrix operator*(const T& c, Matrix m) {
        for (auto& x : m.data_) x *= c;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix pow(unsigned n) const {
        require_square("pow");
        Matrix result = identity(rows_), base = *this;
        while (n) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

    void require_square(const char* op) const {
        if (!is_square()) throw DimensionError(std::string("Matrix: ") + op + " needs a square matrix");
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using ApproxMatrix = Matrix<ComplexApprox>;

template <typename T>
T det(const Matrix<T>& m) {
    m.require_square("det");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    Matrix<T> a = m;
    bool negate = false;
    if constexpr (std::is_same_v<T, Rat>) {
        // Bareiss: every division below is exact.
        Rat prev(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            auto p = detail::choose_pivot<T>([&](std::size_t i) -> const T& { return a(i, k); }, k, n);
            if (!p) return Rat(0);
            if (*p != k) { a.swap_rows(*p, k); negate = !negate; }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
                a(i, k) = Rat(0);
            }
            prev = a(k, k);
        }
        return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
    } else {
        T result(1);
        for (std::size_t k = 0; k < n; ++k) {
            auto p = detail::choose_pivot<T>([&](std::size_t i) -> const T& { return a(i, k); }, k, n);
            if (!p) return T(0);
            if (*p != k) { a.swap_rows(*p, k); negate = !negate; }
            result *= a(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                T f = a(i, k) / a(k, k);
                for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            }
        }
        return negate ? -result : result;
    }
}

/// Solves a·X = b for a square nonsingular a and any number of right-hand columns.
template <typename T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    a.require_square("solve");
    if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong row count");
    const std::size_t n = a.rows(), m = b.cols();
    Matrix<T> aug(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
    }
    for (std::size_t k = 0; k < n; ++k) {
        auto p = detail::choose_pivot<T>([&](std::size_t i) -> const T& { return aug(i, k); }, k, n);
        if (!p) throw SingularError("solve: matrix is singular (det = 0)");
        aug.swap_rows(*p, k);
        T inv = T(1) / aug(k, k);
        for (std::size_t j = k; j < n + m; ++j) aug(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(aug(i, k))) continue;
            T f = aug(i, k);
            for (std::size_t j = k; j < n + m; ++j) aug(i, j) -= f * aug(k, j);
        }
    }
    Matrix<T> x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = aug(i, n + j);
    return x;
}

template <typename T>
std::vector<T> solve(const Matrix<T>& a, std::span<const T> b) {
    Matrix<T> rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    return solve(a, rhs).column(0);
}

template <typename T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
    return solve(a, std::span<const T>(b));
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    m.require_square("inverse");
    return solve(m, Matrix<T>::identity(m.rows()));
}

/// Reduced row echelon form of a rational matrix; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        auto p = detail::choose_pivot<Rat>([&](std::size_t i) -> const Rat& { return a(i, c); }, r, a.rows());
        if (!p) continue;
        a.swap_rows(*p, r);
        Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix a) { return rref(a).size(); }

/// A nonzero x with a·x = 0, or nullopt when the columns are independent.
inline std::optional<std::vector<Rat>> kernel_vector(RatMatrix a) {
    auto pivots = rref(a);
    if (pivots.size() == a.cols()) return std::nullopt;
    std::size_t free_col = 0;
    for (std::size_t p = 0; free_col < a.cols(); ++free_col) {
        if (p < pivots.size() && pivots[p] == free_col) { ++p; continue; }
        break;
    }
    std::vector<Rat> x(a.cols(), Rat(0));
    x[free_col] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, free_col);
    return x;
}

}  // namespace recform
