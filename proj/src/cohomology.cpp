#include "flataffine/cohomology.hpp"

#include <stdexcept>

namespace flataffine {

std::vector<std::vector<Rational>> CochainSpace::flattened() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(flatten_cochain(b));
    return out;
}

std::vector<Rational> flatten_cochain(const RatMat& g) {
    std::vector<Rational> v;
    v.reserve(g.rows() * g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) v.push_back(g(i, j));
    return v;
}

static RatMat unflatten(std::size_t n, const std::vector<Rational>& v) {
    RatMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = v[i * n + j];
    return g;
}

static void require_left_symmetric(const ProductTable& P) {
    if (!is_left_symmetric(P).ok)
        throw std::invalid_argument("product is not left-symmetric");
}

CochainSpace cocycle_space(const ProductTable& P) {
    require_left_symmetric(P);
    const std::size_t n = P.dim();
    // unknowns f_{mc} indexed m*n + c; one equation per ordered triple (a,b,c):
    //   f(ab - ba, c) - f(a, bc) + f(b, ac) = 0
    RatMat sys(n * n * n, n * n);
    std::size_t row = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c, ++row) {
                for (std::size_t m = 0; m < n; ++m) {
                    sys(row, m * n + c) += P.p(a, b, m) - P.p(b, a, m);
                    sys(row, a * n + m) -= P.p(b, c, m);
                    sys(row, b * n + m) += P.p(a, c, m);
                }
            }
    CochainSpace z;
    z.dim_ambient = n;
    for (auto& v : sys.nullspace()) z.basis.push_back(unflatten(n, v));
    return z;
}

CochainSpace coboundary_space(const ProductTable& P) {
    require_left_symmetric(P);
    const std::size_t n = P.dim();
    // span of the n matrices (phi_k o P)_{ij} = p^k_{ij}; keep an independent
    // subset, scanning k in ascending order.
    CochainSpace b;
    b.dim_ambient = n;
    std::vector<std::vector<Rational>> flat;
    for (std::size_t k = 0; k < n; ++k) {
        RatMat g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = P.p(i, j, k);
        auto v = flatten_cochain(g);
        if (!in_span(flat, v)) {
            flat.push_back(v);
            b.basis.push_back(std::move(g));
        }
    }
    return b;
}

CohomologyResult cohomology(const ProductTable& P) {
    CohomologyResult res;
    res.cocycles = cocycle_space(P);
    res.coboundaries = coboundary_space(P);
    res.dim_h2 = res.cocycles.rank() - res.coboundaries.rank();

    // Complete the coboundary basis to a basis of the cocycle space; the
    // appended cocycles represent a basis of H^2. Scanning the cocycle basis
    // in its native order keeps the choice deterministic.
    auto span = res.coboundaries.flattened();
    for (const auto& zmat : res.cocycles.basis) {
        auto v = flatten_cochain(zmat);
        if (!in_span(span, v)) {
            span.push_back(v);
            res.representatives.push_back(zmat);
        }
    }
    if (res.representatives.size() != res.dim_h2)
        throw std::logic_error("coboundary space not contained in cocycle space");
    return res;
}

bool is_cocycle(const ProductTable& P, const RatMat& g) {
    const std::size_t n = P.dim();
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("cochain shape mismatch");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Rational s = 0;
                for (std::size_t m = 0; m < n; ++m) {
                    s += (P.p(a, b, m) - P.p(b, a, m)) * g(m, c);
                    s -= P.p(b, c, m) * g(a, m);
                    s += P.p(a, c, m) * g(b, m);
                }
                if (s != 0) return false;
            }
    return true;
}

ProductTable central_extension(const ProductTable& P, const RatMat& g,
                               const std::string& central_label) {
    if (!is_cocycle(P, g)) throw std::invalid_argument("not a 2-cocycle of the product");
    const std::size_t n = P.dim();
    std::vector<std::string> labels;
    labels.push_back(central_label);
    for (const auto& l : P.labels()) {
        if (l == central_label) throw std::invalid_argument("central label collides with basis");
        labels.push_back(l);
    }
    ProductTable E(n + 1, labels);
    for (auto [i, j, k, c] : P.entries()) E.set(i + 1, j + 1, k + 1, c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j) != 0) E.set(i + 1, j + 1, 0, g(i, j));
    return E;
}

} // namespace flataffine
