#pragma once

#include "flataffine/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace flataffine {

/// Dense matrix over the exact rationals. Small dimensions only; all
/// eliminations are exact, so rank/nullspace answers are never approximate.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    RatMat(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMat& o) const = default;

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator*(const Rational& c) const;
    RatMat transposed() const;
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of the right nullspace, one vector per free column, produced in
    /// ascending free-column order (deterministic).
    std::vector<std::vector<Rational>> nullspace() const;

    /// Solves A x = b exactly; throws std::domain_error when A is singular.
    std::vector<Rational> solve(const std::vector<Rational>& b) const;

    RatMat inverse() const;

    /// Signature (n_plus, n_minus) of a symmetric matrix, computed by exact
    /// congruence diagonalization (Sylvester's law).
    std::pair<int, int> signature() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Rank of the row span of a list of equally-sized vectors.
std::size_t span_rank(const std::vector<std::vector<Rational>>& vecs);

/// True when v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Rational>>& vecs, const std::vector<Rational>& v);

} // namespace flataffine
