#pragma once

#include "flataffine/algebra.hpp"

namespace flataffine {

/// r = sum_{i<j} r^{ij} e_i ^ e_j on a Lie algebra, acting on covectors by
/// r(alpha, beta) = sum_{i<j} r^{ij} (alpha_i beta_j - alpha_j beta_i).
struct Bivector {
    StructureConstants algebra;
    RatMat r; // full antisymmetric matrix, r(i,j) = r^{ij}

    Bivector() = default;
    Bivector(StructureConstants L, RatMat m);

    Rational eval(const LinearForm& a, const LinearForm& b) const;
};

/// Matrix of r#: beta(r#(alpha)) = r(alpha, beta); columns act on covector
/// coordinates, result in vector coordinates.
RatMat r_sharp(const Bivector& rv);

struct CybeReport {
    bool ok = true;
    // basis covector triples (i, j, k) where the cyclic sum is nonzero
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> violations;
};

/// Classical Yang-Baxter equation via the cyclic form
/// alpha([r#b, r#c]) + beta([r#c, r#a]) + gamma([r#a, r#b]) = 0.
CybeReport cybe_check(const Bivector& rv);

/// Coadjoint action (ad*_x a)(y) = -a([x, y]) as an operator on the dual.
RatMat coadjoint(const StructureConstants& L, const std::vector<Rational>& x);

struct DualAlgebraPack {
    StructureConstants bracket; // [a,b]_r on the dual space
    ProductTable product;       // left-symmetric product inducing it
    RatMat sharp;               // matrix of r#
};

/// Dual Lie bracket and left-symmetric product induced by a CYBE solution.
/// Requires cybe_check to pass.
DualAlgebraPack dual_structures(const Bivector& rv);

StructureConstants dual_bracket(const Bivector& rv);
ProductTable dual_product(const Bivector& rv);

struct DoubleAlgebraPack {
    StructureConstants bracket; // on g + g*, original basis first
    BilinearForm pairing;       // <(x,a),(y,b)> = b(x) + a(y)
};

/// Lie algebra structure on g + g* with the canonical hyperbolic pairing.
DoubleAlgebraPack double_algebra(const Bivector& rv);

/// Metric induced on the dual by a nondegenerate symmetric form (inverse
/// Gram matrix). Throws on degenerate input.
BilinearForm dual_metric(const BilinearForm& k);

} // namespace flataffine
