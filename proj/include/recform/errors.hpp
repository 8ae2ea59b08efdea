#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recform {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes or arities do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation (zero polynomial,
/// gamma_0 = 0, non-integral data where integers are required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A square matrix turned out to be singular.
class SingularError : public Error {
public:
    using Error::Error;
};

/// The initial vectors of a sequence family are linearly dependent (det G = 0).
/// `dependent_rows` lists 0-based rows that take part in a linear relation.
class DependentInitialsError : public Error {
public:
    DependentInitialsError(std::string what, std::vector<std::size_t> rows)
        : Error(std::move(what)), dependent_rows(std::move(rows)) {}

    std::vector<std::size_t> dependent_rows;
};

/// Root iteration did not reach the requested error bound.
class PrecisionError : public Error {
public:
    PrecisionError(std::string what, double best_bound)
        : Error(std::move(what)), best_bound(best_bound) {}

    double best_bound;
};

/// An exact or numerical self-check failed.
class CertificationError : public Error {
public:
    CertificationError(std::string what, double residual = 0.0)
        : Error(std::move(what)), residual(residual) {}

    double residual;
};

/// A fitting system does not determine its unknowns uniquely.
class UnderdeterminedError : public Error {
public:
    UnderdeterminedError(std::string what, std::size_t rank, std::size_t unknowns)
        : Error(std::move(what)), rank(rank), unknowns(unknowns) {}

    std::size_t rank;
    std::size_t unknowns;
};

}  // namespace recform
