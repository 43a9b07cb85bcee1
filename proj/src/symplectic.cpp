#include "flataffine/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace flataffine {

SymplecticForm::SymplecticForm(RatMat m) : form{FormKind::Antisymmetric, std::move(m)} {
    if (form.m.rows() != form.m.cols())
        throw std::invalid_argument("symplectic form must be square");
}

SymplecticReport symplectic_check(const SymplecticForm& w, const StructureConstants& L) {
    const std::size_t n = L.dim();
    if (w.form.m.rows() != n)
        throw std::invalid_argument("symplectic form dimension mismatch");

    SymplecticReport rep;
    rep.antisymmetric = w.form.symmetry_ok();
    rep.nondegenerate = (w.form.m.rank() == n);

    auto wv = [&](const std::vector<Rational>& x, std::size_t z) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += x[k] * w.form.m(k, z);
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::vector<Rational> bij(n), bjk(n), bki(n);
                for (std::size_t m = 0; m < n; ++m) {
                    bij[m] = L.c(i, j, m);
                    bjk[m] = L.c(j, k, m);
                    bki[m] = L.c(k, i, m);
                }
                Rational s = wv(bij, k) + wv(bjk, i) + wv(bki, j);
                if (s != 0) {
                    rep.cocycle = false;
                    rep.cocycle_violations.emplace_back(i, j, k);
                }
            }
    return rep;
}

ProductTable product_from_symplectic(const SymplecticForm& w, const StructureConstants& L) {
    const std::size_t n = L.dim();
    auto rep = symplectic_check(w, L);
    if (!rep.ok())
        throw std::invalid_argument("form is not symplectic for the given bracket");

    // w(e_i e_j, e_k) = -w(e_j, [e_i, e_k]); solve W^T v = rhs for each (i,j).
    RatMat WT = w.form.m.transposed();
    ProductTable P(n, L.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> rhs(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                Rational s = 0;
                for (std::size_t m = 0; m < n; ++m) s += w.form.m(j, m) * L.c(i, k, m);
                rhs[k] = -s;
            }
            auto v = WT.solve(rhs);
            for (std::size_t k = 0; k < n; ++k)
                if (v[k] != 0) P.set(i, j, k, v[k]);
        }
    return P;
}

void validate_split(const LagrangianSplit& split, const SymplecticForm& w,
                    const StructureConstants& L) {
    const std::size_t n = L.dim();
    std::set<std::size_t> seen;
    for (auto part : {&split.first, &split.second})
        for (auto i : *part) {
            if (i >= n) throw std::invalid_argument("split index out of range");
            if (!seen.insert(i).second) throw std::invalid_argument("split parts overlap");
        }
    if (seen.size() != n) throw std::invalid_argument("split does not cover the basis");

    auto check_part = [&](const std::vector<std::size_t>& part) {
        // isotropic
        for (auto i : part)
            for (auto j : part)
                if (w.form.m(i, j) != 0)
                    throw std::invalid_argument("split part is not isotropic");
        // subalgebra: brackets stay in the span of the part
        for (auto i : part)
            for (auto j : part) {
                if (i >= j) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (L.c(i, j, k) == 0) continue;
                    if (std::find(part.begin(), part.end(), k) == part.end())
                        throw std::invalid_argument("split part is not a subalgebra");
                }
            }
    };
    check_part(split.first);
    check_part(split.second);
}

ProductTable hess_connection(const SymplecticForm& w, const StructureConstants& L,
                             const LagrangianSplit& split) {
    validate_split(split, w, L);
    const std::size_t n = L.dim();
    ProductTable dot = product_from_symplectic(w, L);

    std::vector<int> side(n, 0); // 0 = first part, 1 = second
    for (auto i : split.second) side[i] = 1;

    auto project = [&](const std::vector<Rational>& v, int part) {
        std::vector<Rational> out(n, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
            if (side[k] == part) out[k] = v[k];
        return out;
    };
    auto is_in_part = [&](const std::vector<Rational>& v, int part) {
        for (std::size_t k = 0; k < n; ++k)
            if (side[k] != part && v[k] != 0) return false;
        return true;
    };
    auto basis = [&](std::size_t i) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = 1;
        return v;
    };
    auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * dot.p(i, j, k);
            }
        }
        return out;
    };
    auto brk = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                for (std::size_t k = 0; k < n; ++k) out[k] += a[i] * b[j] * L.c(i, j, k);
            }
        }
        return out;
    };

    ProductTable H(n, L.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto x = basis(i), y = basis(j);
            auto x1 = project(x, 0), x2 = project(x, 1);
            auto y1 = project(y, 0), y2 = project(y, 1);

            auto t1 = mul(x1, y1);
            auto t2 = mul(x2, y2);
            // subalgebra products of the split stay in their own part
            if (!is_in_part(t1, 0) || !is_in_part(t2, 1))
                throw std::logic_error("split products leave their part");
            auto t3 = project(brk(x2, y1), 0);
            auto t4 = project(brk(x1, y2), 1);

            for (std::size_t k = 0; k < n; ++k) {
                Rational s = t1[k] + t2[k] + t3[k] + t4[k];
                if (s != 0) H.set(i, j, k, s);
            }
        }
    return H;
}

double symplectomorphism_residual(const CoordinateMap& f, const std::vector<double>& point) {
    if (f.inputs.size() != 2 || f.outputs.size() != 2)
        throw std::invalid_argument("symplectomorphism check needs a planar map");
    if (point.size() != 2 || point[0] <= 0)
        throw std::invalid_argument("sample point must lie in the half-plane x > 0");

    auto J = numeric_jacobian(f, point);
    double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    auto img = f(point);
    if (img[0] <= 0)
        throw std::invalid_argument("map leaves the half-plane x > 0");
    double target = (img[0] / point[0]) * (img[0] / point[0]);
    return std::abs(det - target) / target;
}

double symplectomorphism_residual(const CoordinateMap& f,
                                  const std::vector<std::vector<double>>& points) {
    double worst = 0;
    for (const auto& p : points) worst = std::max(worst, symplectomorphism_residual(f, p));
    return worst;
}

} // namespace flataffine
