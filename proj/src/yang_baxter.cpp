#include "flataffine/yang_baxter.hpp"

#include <stdexcept>

namespace flataffine {

Bivector::Bivector(StructureConstants L, RatMat m) : algebra(std::move(L)), r(std::move(m)) {
    const std::size_t n = algebra.dim();
    if (r.rows() != n || r.cols() != n) throw std::invalid_argument("bivector shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j) != -r(j, i)) throw std::invalid_argument("bivector not antisymmetric");
}

Rational Bivector::eval(const LinearForm& a, const LinearForm& b) const {
    const std::size_t n = algebra.dim();
    if (a.size() != n || b.size() != n) throw std::invalid_argument("shape mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j) != 0) s += r(i, j) * a[i] * b[j];
    return s;
}

RatMat r_sharp(const Bivector& rv) {
    // beta(r# alpha) = r(alpha, beta) = alpha^T R beta, so r# = R^T.
    return rv.r.transposed();
}

static std::vector<Rational> dual_basis_vec(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
}

CybeReport cybe_check(const Bivector& rv) {
    const std::size_t n = rv.algebra.dim();
    RatMat S = r_sharp(rv);
    std::vector<std::vector<Rational>> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = S.apply(dual_basis_vec(n, i));

    CybeReport rep;
    auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
        return rv.algebra.bracket(img[b], img[c])[a];
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                Rational s = term(a, b, c) + term(b, c, a) + term(c, a, b);
                if (s != 0) {
                    rep.ok = false;
                    rep.violations.emplace_back(a, b, c);
                }
            }
    return rep;
}

RatMat coadjoint(const StructureConstants& L, const std::vector<Rational>& x) {
    const std::size_t n = L.dim();
    // (ad*_x a)_y = -a([x, e_y]) => matrix -(ad_x)^T
    RatMat m(n, n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k) {
            Rational adxy = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != 0) adxy += x[i] * L.c(i, y, k);
            m(y, k) = -adxy;
        }
    return m;
}

DualAlgebraPack dual_structures(const Bivector& rv) {
    auto rep = cybe_check(rv);
    if (!rep.ok) throw std::invalid_argument("bivector does not satisfy the CYBE");

    const std::size_t n = rv.algebra.dim();
    RatMat S = r_sharp(rv);

    std::vector<std::string> labels;
    for (const auto& l : rv.algebra.labels()) labels.push_back(l + "*");

    // coadjoint operators along r#(dual basis)
    std::vector<RatMat> coad(n);
    for (std::size_t i = 0; i < n; ++i)
        coad[i] = coadjoint(rv.algebra, S.apply(dual_basis_vec(n, i)));

    DualAlgebraPack pack;
    pack.sharp = S;
    pack.product = ProductTable(n, labels);
    pack.bracket = StructureConstants(n, labels);

    // a.b = ad*_{r# a} b, bracket = a.b - b.a; this sign assembly reproduces
    // the catalog dual constants together with r# = R^T.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto prod = coad[i].apply(dual_basis_vec(n, j));
            for (std::size_t k = 0; k < n; ++k)
                if (prod[k] != 0) pack.product.set(i, j, k, prod[k]);
        }
    pack.bracket = commutator_bracket(pack.product);
    return pack;
}

StructureConstants dual_bracket(const Bivector& rv) { return dual_structures(rv).bracket; }
ProductTable dual_product(const Bivector& rv) { return dual_structures(rv).product; }

DoubleAlgebraPack double_algebra(const Bivector& rv) {
    const std::size_t n = rv.algebra.dim();
    auto dual = dual_structures(rv);

    std::vector<std::string> labels = rv.algebra.labels();
    for (const auto& l : dual.bracket.labels()) labels.push_back(l);

    StructureConstants D(2 * n, labels);
    for (auto [i, j, k, c] : rv.algebra.entries()) D.set(i, j, k, c);
    for (auto [i, j, k, c] : dual.bracket.entries()) D.set(n + i, n + j, n + k, c);

    // Mixed brackets [x, b] = (-ad*_b x, ad*_x b) with the standard coadjoint
    // conventions on both factors; invariance of the pairing pins the signs.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // g-part: coefficient on e_y is [b, y*]_r evaluated on e_i
            for (std::size_t y = 0; y < n; ++y) {
                Rational c = dual.bracket.c(j, y, i);
                if (c != 0) D.set(i, n + j, y, c);
            }
            // g*-part: coefficient on e_y* is -c^j_{iy}
            for (std::size_t y = 0; y < n; ++y) {
                Rational c = -rv.algebra.c(i, y, j);
                if (c != 0) D.set(i, n + j, n + y, c);
            }
        }

    RatMat pm(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        pm(i, n + i) = 1;
        pm(n + i, i) = 1;
    }
    return {std::move(D), BilinearForm(FormKind::Symmetric, std::move(pm))};
}

BilinearForm dual_metric(const BilinearForm& k) {
    if (k.kind != FormKind::Symmetric || !k.symmetry_ok())
        throw std::invalid_argument("metric must be symmetric");
    RatMat inv;
    try {
        inv = k.m.inverse();
    } catch (const std::domain_error&) {
        throw std::domain_error("metric is degenerate");
    }
    return BilinearForm(FormKind::Symmetric, std::move(inv));
}

} // namespace flataffine
