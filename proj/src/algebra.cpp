#include "flataffine/algebra.hpp"

#include <stdexcept>

namespace flataffine {

static std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> given) {
    if (!given.empty()) {
        if (given.size() != n) throw std::invalid_argument("label count != dim");
        return given;
    }
    std::vector<std::string> l;
    l.reserve(n);
    for (std::size_t i = 0; i < n; ++i) l.push_back("e" + std::to_string(i));
    return l;
}

StructureConstants::StructureConstants(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(default_labels(dim, std::move(labels))) {}

void StructureConstants::set_labels(std::vector<std::string> labels) {
    labels_ = default_labels(dim_, std::move(labels));
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("bracket index");
    if (i == j) {
        if (c != 0) throw std::invalid_argument("[x,x] must vanish");
        return;
    }
    auto key = i < j ? std::make_tuple(i, j, k) : std::make_tuple(j, i, k);
    Rational v = i < j ? c : -c;
    if (v == 0) c_.erase(key);
    else c_[key] = v;
}

Rational StructureConstants::c(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("bracket index");
    if (i == j) return 0;
    auto key = i < j ? std::make_tuple(i, j, k) : std::make_tuple(j, i, k);
    auto it = c_.find(key);
    if (it == c_.end()) return 0;
    return i < j ? it->second : -it->second;
}

std::vector<Rational> StructureConstants::bracket(const std::vector<Rational>& x,
                                                  const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("shape mismatch");
    std::vector<Rational> r(dim_);
    for (const auto& [key, v] : c_) {
        auto [i, j, k] = key;
        r[k] += v * (x[i] * y[j] - x[j] * y[i]);
    }
    return r;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>
StructureConstants::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> out;
    out.reserve(c_.size());
    for (const auto& [key, v] : c_) {
        auto [i, j, k] = key;
        out.emplace_back(i, j, k, v);
    }
    return out;
}

ProductTable::ProductTable(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(default_labels(dim, std::move(labels))) {}

void ProductTable::set_labels(std::vector<std::string> labels) {
    labels_ = default_labels(dim_, std::move(labels));
}

void ProductTable::set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("product index");
    auto key = std::make_tuple(i, j, k);
    if (c == 0) p_.erase(key);
    else p_[key] = c;
}

Rational ProductTable::p(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("product index");
    auto it = p_.find(std::make_tuple(i, j, k));
    return it == p_.end() ? Rational(0) : it->second;
}

std::vector<Rational> ProductTable::mul(const std::vector<Rational>& x,
                                        const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("shape mismatch");
    std::vector<Rational> r(dim_);
    for (const auto& [key, v] : p_) {
        auto [i, j, k] = key;
        if (x[i] == 0 || y[j] == 0) continue;
        r[k] += v * x[i] * y[j];
    }
    return r;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>
ProductTable::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> out;
    out.reserve(p_.size());
    for (const auto& [key, v] : p_) {
        auto [i, j, k] = key;
        out.emplace_back(i, j, k, v);
    }
    return out;
}

bool BilinearForm::symmetry_ok() const {
    if (m.rows() != m.cols()) return false;
    if (kind == FormKind::General) return true;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (kind == FormKind::Symmetric && m(i, j) != m(j, i)) return false;
            if (kind == FormKind::Antisymmetric && m(i, j) != -m(j, i)) return false;
        }
    return true;
}

Rational BilinearForm::eval(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    if (x.size() != m.rows() || y.size() != m.cols()) throw std::invalid_argument("shape mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && y[j] != 0) r += x[i] * m(i, j) * y[j];
    }
    return r;
}

static std::vector<Rational> basis_vec(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
}

JacobiReport check_jacobi(const StructureConstants& L) {
    const std::size_t n = L.dim();
    JacobiReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                auto s = L.bracket(L.bracket(ei, ej), ek);
                auto t = L.bracket(L.bracket(ej, ek), ei);
                auto u = L.bracket(L.bracket(ek, ei), ej);
                bool zero = true;
                for (std::size_t m = 0; m < n; ++m)
                    if (s[m] + t[m] + u[m] != 0) { zero = false; break; }
                if (!zero) {
                    rep.ok = false;
                    rep.violations.emplace_back(i, j, k);
                }
            }
    return rep;
}

TripleReport is_left_symmetric(const ProductTable& P) {
    const std::size_t n = P.dim();
    TripleReport rep;
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        auto ea = basis_vec(n, a), eb = basis_vec(n, b), ec = basis_vec(n, c);
        auto lhs = P.mul(P.mul(ea, eb), ec);
        auto rhs = P.mul(ea, P.mul(eb, ec));
        for (std::size_t m = 0; m < n; ++m) lhs[m] -= rhs[m];
        return lhs;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto d1 = assoc(a, b, c);
                auto d2 = assoc(b, a, c);
                bool eq = true;
                for (std::size_t m = 0; m < n; ++m)
                    if (d1[m] != d2[m]) { eq = false; break; }
                if (!eq) {
                    rep.ok = false;
                    rep.violations.emplace_back(a, b, c);
                }
            }
    return rep;
}

StructureConstants commutator_bracket(const ProductTable& P) {
    const std::size_t n = P.dim();
    StructureConstants L(n, P.labels());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = P.p(i, j, k) - P.p(j, i, k);
                if (c != 0) L.set(i, j, k, c);
            }
    return L;
}

PairReport is_compatible(const ProductTable& P, const StructureConstants& L) {
    if (P.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = P.dim();
    PairReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool eq = true;
            for (std::size_t k = 0; k < n; ++k)
                if (P.p(i, j, k) - P.p(j, i, k) != L.c(i, j, k)) { eq = false; break; }
            if (!eq) {
                rep.ok = false;
                rep.violations.emplace_back(i, j);
            }
        }
    return rep;
}

LinearOperator left_mult(const ProductTable& P, std::size_t i) {
    const std::size_t n = P.dim();
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = P.p(i, j, k);
    return m;
}

LinearOperator right_mult(const ProductTable& P, std::size_t i) {
    const std::size_t n = P.dim();
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = P.p(j, i, k);
    return m;
}

PairReport operator_relations_check(const ProductTable& P, const StructureConstants& L) {
    if (P.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = P.dim();
    PairReport rep;
    std::vector<LinearOperator> Lm;
    Lm.reserve(n);
    for (std::size_t i = 0; i < n; ++i) Lm.push_back(left_mult(P, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RatMat lhs = Lm[i] * Lm[j] - Lm[j] * Lm[i];
            RatMat rhs(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = L.c(i, j, k);
                if (c != 0) rhs = rhs + Lm[k] * c;
            }
            bool pair_ok = lhs == rhs;
            // second half of the system: L_{e_i} e_j - L_{e_j} e_i = [e_i, e_j]
            for (std::size_t k = 0; pair_ok && k < n; ++k)
                if (P.p(i, j, k) - P.p(j, i, k) != L.c(i, j, k)) pair_ok = false;
            if (!pair_ok) {
                rep.ok = false;
                rep.violations.emplace_back(i, j);
            }
        }
    return rep;
}

std::vector<std::vector<std::vector<Rational>>> torsion(const ProductTable& P,
                                                        const StructureConstants& L) {
    if (P.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = P.dim();
    std::vector<std::vector<std::vector<Rational>>> t(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t[i][j][k] = P.p(i, j, k) - P.p(j, i, k) - L.c(i, j, k);
    return t;
}

std::vector<std::vector<RatMat>> curvature(const ProductTable& P, const StructureConstants& L) {
    if (P.dim() != L.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = P.dim();
    std::vector<LinearOperator> Lm;
    Lm.reserve(n);
    for (std::size_t i = 0; i < n; ++i) Lm.push_back(left_mult(P, i));
    std::vector<std::vector<RatMat>> r(n, std::vector<RatMat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatMat m = Lm[i] * Lm[j] - Lm[j] * Lm[i];
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = L.c(i, j, k);
                if (c != 0) m = m - Lm[k] * c;
            }
            r[i][j] = std::move(m);
        }
    return r;
}

bool is_torsion_free(const ProductTable& P, const StructureConstants& L) {
    auto t = torsion(P, L);
    for (const auto& ti : t)
        for (const auto& tij : ti)
            for (const auto& x : tij)
                if (x != 0) return false;
    return true;
}

bool is_flat(const ProductTable& P, const StructureConstants& L) {
    auto r = curvature(P, L);
    for (const auto& ri : r)
        for (const auto& rij : ri)
            if (!rij.is_zero()) return false;
    return true;
}

bool completeness_trace_check(const ProductTable& P) {
    const std::size_t n = P.dim();
    for (std::size_t a = 0; a < n; ++a) {
        Rational tr = 0;
        for (std::size_t j = 0; j < n; ++j) tr += P.p(j, a, j);
        if (tr != 0) return false;
    }
    return true;
}

bool is_unimodular(const StructureConstants& L) {
    const std::size_t n = L.dim();
    for (std::size_t x = 0; x < n; ++x) {
        Rational tr = 0;
        for (std::size_t j = 0; j < n; ++j) tr += L.c(x, j, j);
        if (tr != 0) return false;
    }
    return true;
}

bool is_ad_invariant(const BilinearForm& k, const StructureConstants& L) {
    const std::size_t n = L.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Rational s = 0;
                for (std::size_t m = 0; m < n; ++m)
                    s += L.c(x, y, m) * k.m(m, z) + L.c(x, z, m) * k.m(y, m);
                if (s != 0) return false;
            }
    return true;
}

TripleReport levi_civita_check(const ProductTable& P, const BilinearForm& k) {
    if (P.dim() != k.m.rows()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = P.dim();
    TripleReport rep;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Rational s = 0;
                for (std::size_t m = 0; m < n; ++m)
                    s += P.p(x, y, m) * k.m(m, z) + P.p(x, z, m) * k.m(y, m);
                if (s != 0) {
                    rep.ok = false;
                    rep.violations.emplace_back(x, y, z);
                }
            }
    return rep;
}

} // namespace flataffine
