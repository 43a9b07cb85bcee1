#pragma once

#include "flataffine/ratmat.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace flataffine {

/// Lie algebra structure constants [e_i, e_j] = sum_k c^k_{ij} e_k.
/// Entries are stored for i < j only; antisymmetry is synthesized on read.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(std::size_t dim, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    Rational c(std::size_t i, std::size_t j, std::size_t k) const;

    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const;

    /// Stored entries as (i, j, k, c) with i < j, in deterministic order.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries() const;

    bool operator==(const StructureConstants&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> c_;
};

/// Bilinear product e_i . e_j = sum_k p^k_{ij} e_k on a based vector space.
class ProductTable {
public:
    ProductTable() = default;
    ProductTable(std::size_t dim, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    Rational p(std::size_t i, std::size_t j, std::size_t k) const;

    std::vector<Rational> mul(const std::vector<Rational>& x,
                              const std::vector<Rational>& y) const;

    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries() const;

    bool operator==(const ProductTable&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> p_;
};

enum class FormKind { General, Symmetric, Antisymmetric };

/// Bilinear form with an optional declared symmetry class, verified on demand.
struct BilinearForm {
    FormKind kind = FormKind::General;
    RatMat m; // m(i,j) = B(e_i, e_j)

    BilinearForm() = default;
    BilinearForm(FormKind k, RatMat mat) : kind(k), m(std::move(mat)) {}

    bool symmetry_ok() const;
    Rational eval(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

using LinearForm = std::vector<Rational>;   // components in the dual basis
using LinearOperator = RatMat;              // column j = image of e_j

struct JacobiReport {
    bool ok = true;
    // violating basis triples (i, j, k)
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> violations;
};

struct TripleReport {
    bool ok = true;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> violations;
};

struct PairReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

JacobiReport check_jacobi(const StructureConstants& L);

/// (xy)z - x(yz) = (yx)z - y(xz) on all basis triples.
TripleReport is_left_symmetric(const ProductTable& P);

/// [x,y] := xy - yx as structure constants (antisymmetric by construction).
StructureConstants commutator_bracket(const ProductTable& P);

/// xy - yx = [x,y] for all basis pairs. Throws on dimension mismatch.
PairReport is_compatible(const ProductTable& P, const StructureConstants& L);

LinearOperator left_mult(const ProductTable& P, std::size_t i);
LinearOperator right_mult(const ProductTable& P, std::size_t i);

/// The operator system of a flat torsion-free connection, all pairs i < j:
/// [L_{e_i}, L_{e_j}] = L_{[e_i,e_j]} and L_{e_i} e_j - L_{e_j} e_i = [e_i,e_j].
/// Holds iff the product is left-symmetric and compatible with L.
PairReport operator_relations_check(const ProductTable& P, const StructureConstants& L);

/// T(e_i,e_j) = e_i e_j - e_j e_i - [e_i,e_j]; zero iff torsion-free.
/// Returned tensor t[i][j] is the coefficient vector of T(e_i, e_j).
std::vector<std::vector<std::vector<Rational>>> torsion(const ProductTable& P,
                                                        const StructureConstants& L);

/// R(e_i,e_j)e_k = L_iL_j e_k - L_jL_i e_k - L_{[e_i,e_j]} e_k.
/// Returned tensor r[i][j] is the matrix of R(e_i,e_j).
std::vector<std::vector<RatMat>> curvature(const ProductTable& P, const StructureConstants& L);

bool is_torsion_free(const ProductTable& P, const StructureConstants& L);
bool is_flat(const ProductTable& P, const StructureConstants& L);

/// tr(R_a) = 0 for every basis vector a (right multiplications).
bool completeness_trace_check(const ProductTable& P);

/// tr(ad_x) = 0 for every basis vector.
bool is_unimodular(const StructureConstants& L);

/// <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
bool is_ad_invariant(const BilinearForm& k, const StructureConstants& L);

/// k(x.y, z) + k(y, x.z) = 0 on all basis triples (metric connection test).
TripleReport levi_civita_check(const ProductTable& P, const BilinearForm& k);

} // namespace flataffine
