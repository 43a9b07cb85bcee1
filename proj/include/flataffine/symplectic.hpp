#pragma once

#include "flataffine/algebra.hpp"
#include "flataffine/expr.hpp"

namespace flataffine {

/// Antisymmetric nondegenerate 2-form on a Lie algebra.
struct SymplecticForm {
    BilinearForm form; // kind Antisymmetric

    explicit SymplecticForm(RatMat m);
};

struct SymplecticReport {
    bool antisymmetric = true;
    bool nondegenerate = true;
    bool cocycle = true; // w([x,y],z) + w([y,z],x) + w([z,x],y) = 0
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cocycle_violations;

    bool ok() const { return antisymmetric && nondegenerate && cocycle; }
};

SymplecticReport symplectic_check(const SymplecticForm& w, const StructureConstants& L);

/// Unique product with w(x.y, z) = -w(y, [x, z]); left-symmetric and
/// compatible with L whenever w is symplectic for L.
ProductTable product_from_symplectic(const SymplecticForm& w, const StructureConstants& L);

/// Two complementary sets of basis indices spanning w-isotropic subalgebras.
struct LagrangianSplit {
    std::vector<std::size_t> first, second;
};

void validate_split(const LagrangianSplit& split, const SymplecticForm& w,
                    const StructureConstants& L);

/// Product of the connection
///   H_x y = pr1(x).pr1(y) + pr2(x).pr2(y) + pr1([pr2 x, pr1 y]) + pr2([pr1 x, pr2 y])
/// where . is product_from_symplectic and pr_i projects onto the split parts.
ProductTable hess_connection(const SymplecticForm& w, const StructureConstants& L,
                             const LagrangianSplit& split);

/// Residual |df1/dx df2/dy - df1/dy df2/dx - (f1/x)^2| / (f1/x)^2 of the
/// symplectomorphism equation on the half-plane x > 0, via central
/// differences. The map must send the half-plane into itself.
double symplectomorphism_residual(const CoordinateMap& f, const std::vector<double>& point);

/// Max residual over a list of sample points.
double symplectomorphism_residual(const CoordinateMap& f,
                                  const std::vector<std::vector<double>>& points);

} // namespace flataffine
