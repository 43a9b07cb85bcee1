#pragma once

#include "flataffine/algebra.hpp"

namespace flataffine {

/// A subspace of the scalar 2-cochains on an n-dim algebra. Cochains are the
/// n x n matrices g with g(i,j) = f(e_i, e_j); the basis is linearly
/// independent by construction.
struct CochainSpace {
    std::size_t dim_ambient = 0; // n (cochains live in n^2 coordinates)
    std::vector<RatMat> basis;

    std::size_t rank() const { return basis.size(); }
    std::vector<std::vector<Rational>> flattened() const;
};

struct CohomologyResult {
    CochainSpace cocycles;
    CochainSpace coboundaries;
    std::size_t dim_h2 = 0;
    /// Cocycles completing a coboundary basis to a cocycle basis; classes
    /// mod B^2 are a basis of H^2.
    std::vector<RatMat> representatives;
};

/// Flattens an n x n cochain matrix row-major.
std::vector<Rational> flatten_cochain(const RatMat& g);

/// Scalar 2-cocycles of the product P over the trivial one-dimensional
/// bimodule: f(ab - ba, c) = f(a, bc) - f(b, ac).
CochainSpace cocycle_space(const ProductTable& P);

/// Coboundaries f(a,b) = phi(ab), phi ranging over the dual space.
CochainSpace coboundary_space(const ProductTable& P);

CohomologyResult cohomology(const ProductTable& P);

/// True when g satisfies the scalar 2-cocycle equation for P.
bool is_cocycle(const ProductTable& P, const RatMat& g);

/// Central extension R + A with (s, a).(t, b) = (g(a,b), a.b); the new
/// central generator is index 0 with the given label. g must be a cocycle.
ProductTable central_extension(const ProductTable& P, const RatMat& g,
                               const std::string& central_label = "z");

} // namespace flataffine
