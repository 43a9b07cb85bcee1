#include "flataffine/ratmat.hpp"

#include <stdexcept>

namespace flataffine {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

RatMat RatMat::operator*(const Rational& c) const {
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

RatMat RatMat::transposed() const {
    RatMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::vector<std::size_t> RatMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && (*this)(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
        Rational inv = Rational(1) / (*this)(row, col);
        for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Rational f = (*this)(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RatMat::rank() const {
    RatMat copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rational>> RatMat::nullspace() const {
    RatMat r = *this;
    auto pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> RatMat::solve(const std::vector<Rational>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("shape mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || (rows_ && pivots.back() == cols_))
        throw std::domain_error("singular system");
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < rows_; ++i) x[i] = aug(i, cols_);
    return x;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("not square");
    RatMat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || (rows_ && pivots.back() >= cols_))
        throw std::domain_error("singular matrix");
    RatMat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
}

std::pair<int, int> RatMat::signature() const {
    if (rows_ != cols_) throw std::invalid_argument("not square");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("not symmetric");

    RatMat m = *this;
    const std::size_t n = rows_;
    int plus = 0, minus = 0;
    // Symmetric (congruence) elimination: simultaneous row and column ops keep
    // the matrix symmetric, so diagonal signs give the signature.
    auto swap_rc = [&](std::size_t a, std::size_t b) {
        for (std::size_t t = 0; t < n; ++t) std::swap(m(a, t), m(b, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(m(t, a), m(t, b));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && m(j, j) == 0) ++j;
            if (j < n) {
                swap_rc(k, j);
            } else {
                j = k + 1;
                while (j < n && m(k, j) == 0) ++j;
                if (j == n) continue; // zero row/col in the remaining block
                // all remaining diagonal entries vanish, so adding row/col j
                // makes m(k,k) = 2 m(k,j) != 0
                for (std::size_t t = 0; t < n; ++t) m(k, t) += m(j, t);
                for (std::size_t t = 0; t < n; ++t) m(t, k) += m(t, j);
            }
        }
        Rational d = m(k, k);
        if (d > 0) ++plus;
        else ++minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) / d;
            for (std::size_t t = 0; t < n; ++t) m(i, t) -= f * m(k, t);
            for (std::size_t t = 0; t < n; ++t) m(t, i) -= f * m(t, k);
        }
    }
    return {plus, minus};
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vecs) {
    if (vecs.empty()) return 0;
    RatMat m(vecs.size(), vecs[0].size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs[i].size(); ++j) m(i, j) = vecs[i][j];
    return m.rank();
}

bool in_span(const std::vector<std::vector<Rational>>& vecs, const std::vector<Rational>& v) {
    auto with = vecs;
    with.push_back(v);
    return span_rank(with) == span_rank(vecs);
}

} // namespace flataffine
