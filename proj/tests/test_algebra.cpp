#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flataffine/algebra.hpp"
#include "flataffine/catalog.hpp"

using namespace flataffine;

namespace {

const std::vector<Rational> kAlpha = {Rational(-1), Rational(1, 2), Rational(2)};
const std::vector<Rational> kTS = {Rational(0), Rational(1), Rational(3, 2)};

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK_THROWS(parse_rational("x"));
    CHECK(to_double(Rational(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("exact matrix algebra")
{
    RatMat a{{1, 2}, {3, 4}};
    CHECK(a.rank() == 2);
    CHECK(a.inverse() * a == RatMat::identity(2));
    CHECK((a - a).is_zero());

    RatMat sing{{1, 2}, {2, 4}};
    CHECK(sing.rank() == 1);
    CHECK(sing.nullspace().size() == 1);
    CHECK_THROWS_AS(sing.solve({1, 0}), std::domain_error);

    RatMat sym{{0, 1}, {1, 0}};
    CHECK(sym.signature() == std::make_pair(1, 1));
    CHECK(RatMat::identity(3).signature() == std::make_pair(3, 0));

    std::vector<std::vector<Rational>> vs = {{1, 0, 1}, {0, 1, 0}};
    CHECK(span_rank(vs) == 2);
    CHECK(in_span(vs, {2, 3, 2}));
    CHECK_FALSE(in_span(vs, {0, 0, 1}));
}

TEST_CASE("structure constants normalize and validate")
{
    StructureConstants g(3, {"a", "b", "c"});
    g.set(1, 0, 2, -1); // stored as [a,b] = c
    CHECK(g.c(0, 1, 2) == 1);
    CHECK(g.c(1, 0, 2) == -1);
    CHECK_THROWS(g.set(1, 1, 0, 1));

    // erasing an entry restores exact equality with the empty table
    StructureConstants h(3, {"a", "b", "c"});
    h.set(0, 1, 2, 1);
    h.set(0, 1, 2, 0);
    CHECK(h == StructureConstants(3, {"a", "b", "c"}));
}

TEST_CASE("jacobi identity on the catalog algebras")
{
    CHECK(check_jacobi(catalog::oscillator()).ok);
    CHECK(check_jacobi(catalog::euclidean2()).ok);
    CHECK(check_jacobi(catalog::aff_r()).ok);
    CHECK(check_jacobi(catalog::heisenberg()).ok);
    CHECK(check_jacobi(catalog::abelian(5)).ok);
    for (const auto& a1 : kAlpha)
        CHECK(check_jacobi(catalog::dual_oscillator({a1, 1, 0})).ok);
    CHECK(check_jacobi(catalog::dual_oscillator({1, -1, 2})).ok);

    // [a,b]=c, [a,c]=a, [b,c]=b fails at the only triple
    StructureConstants bad(3);
    bad.set(0, 1, 2, 1);
    bad.set(0, 2, 0, 1);
    bad.set(1, 2, 1, 1);
    auto rep = check_jacobi(bad);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.violations.front() == std::make_tuple(0u, 1u, 2u));
}

TEST_CASE("catalog products are left-symmetric, compatible, flat, torsion-free")
{
    struct Case {
        ProductTable P;
        StructureConstants L;
    };
    std::vector<Case> cases;
    cases.push_back({catalog::e2_F1(0), catalog::euclidean2()});
    for (const auto& a : kAlpha) {
        cases.push_back({catalog::e2_F1(a), catalog::euclidean2()});
        cases.push_back({catalog::e2_F2(a), catalog::euclidean2()});
        cases.push_back({catalog::aff_nabla1(a), catalog::aff_r()});
        cases.push_back({catalog::aff_nabla2(a), catalog::aff_r()});
        for (const auto& t : kTS)
            cases.push_back({catalog::osc_F2(a, t), catalog::oscillator()});
    }
    cases.push_back({catalog::e2_F3(), catalog::euclidean2()});
    cases.push_back({catalog::e2_F4(), catalog::euclidean2()});
    for (const auto& t : kTS)
        for (const auto& s : kTS)
            cases.push_back({catalog::osc_F1(t, s), catalog::oscillator()});
    cases.push_back({catalog::osc_F3(), catalog::oscillator()});
    cases.push_back({catalog::osc_F4(), catalog::oscillator()});
    cases.push_back({catalog::aff_iso1(), catalog::aff_r()});
    cases.push_back({catalog::aff_iso2(), catalog::aff_r()});
    cases.push_back({catalog::aff_odot(), catalog::aff_r()});
    cases.push_back({catalog::dual_oscillator_product({1, 1, 0}),
                     catalog::dual_oscillator({1, 1, 0})});
    cases.push_back({catalog::dual_oscillator_product({2, -1, 3}),
                     catalog::dual_oscillator({2, -1, 3})});

    for (const auto& c : cases) {
        CAPTURE(c.P.dim());
        CHECK(is_left_symmetric(c.P).ok);
        CHECK(is_compatible(c.P, c.L).ok);
        CHECK(is_torsion_free(c.P, c.L));
        CHECK(is_flat(c.P, c.L));
        CHECK(operator_relations_check(c.P, c.L).ok);
        CHECK(commutator_bracket(c.P) == c.L);
    }
}

TEST_CASE("parameter guards")
{
    CHECK_THROWS_AS(catalog::e2_F2(0), std::invalid_argument);
    CHECK_THROWS_AS(catalog::osc_F2(0, 1), std::invalid_argument);
}

TEST_CASE("left-symmetry failure is detected with its violating triple")
{
    // flip d.e1 from e2 to e1 in the third euclidean family
    ProductTable bad = catalog::e2_F3();
    bad.set(2, 0, 1, 0);
    bad.set(2, 0, 0, 1);
    auto rep = is_left_symmetric(bad);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(is_compatible(bad, catalog::euclidean2()).ok);
    CHECK_FALSE(operator_relations_check(bad, catalog::euclidean2()).ok);
}

TEST_CASE("operator relations require the torsion part, not just flatness")
{
    // The zero product has commuting left multiplications, so the flatness
    // half of the relations holds trivially; against a nonabelian bracket the
    // torsion half must fail, exactly as compatibility does.
    ProductTable zero(2, {"e1", "e2"});
    auto L = catalog::aff_r();
    CHECK(is_left_symmetric(zero).ok);
    CHECK_FALSE(is_compatible(zero, L).ok);
    CHECK_FALSE(operator_relations_check(zero, L).ok);
    CHECK(is_flat(zero, L)); // curvature alone cannot see the mismatch
}

TEST_CASE("torsion and curvature tensors vanish on a catalog family")
{
    auto P = catalog::osc_F1(1, Rational(1, 2));
    auto L = catalog::oscillator();
    auto T = torsion(P, L);
    for (const auto& row : T)
        for (const auto& v : row)
            for (const auto& c : v)
                CHECK(c == 0);
    auto R = curvature(P, L);
    for (const auto& row : R)
        for (const auto& m : row)
            CHECK(m.is_zero());
}

TEST_CASE("completeness trace criterion across the families")
{
    for (const auto& t : kTS)
        for (const auto& s : kTS)
            CHECK(completeness_trace_check(catalog::osc_F1(t, s)));
    CHECK(completeness_trace_check(catalog::osc_F3()));
    CHECK(completeness_trace_check(catalog::osc_F4()));
    CHECK(completeness_trace_check(catalog::e2_F1(0)));
    CHECK(completeness_trace_check(catalog::e2_F3()));
    CHECK(completeness_trace_check(catalog::e2_F4()));
    for (const auto& a : kAlpha) {
        CHECK_FALSE(completeness_trace_check(catalog::e2_F2(a)));
        CHECK_FALSE(completeness_trace_check(catalog::osc_F2(a, 1)));
        // the affine families are complete only at the special parameter
        CHECK(completeness_trace_check(catalog::aff_nabla1(a)) == (a == 0));
        CHECK(completeness_trace_check(catalog::aff_nabla2(a)) == (a == 0));
        CHECK_FALSE(completeness_trace_check(catalog::e2_F1(a)));
    }
    CHECK_FALSE(completeness_trace_check(catalog::aff_iso1()));
    CHECK_FALSE(completeness_trace_check(catalog::aff_iso2()));
    CHECK_FALSE(completeness_trace_check(catalog::aff_odot()));
}

TEST_CASE("left and right multiplication operators")
{
    auto P = catalog::e2_F1(0);
    auto Ld = left_mult(P, 2);
    // d.e1 = e2, d.e2 = -e1, d.d = 0
    CHECK(Ld(1, 0) == 1);
    CHECK(Ld(0, 1) == -1);
    CHECK(Ld(2, 2) == 0);
    auto Rd = right_mult(P, 2);
    CHECK(Rd.is_zero()); // x.d = 0 for every x at alpha = 0
}

TEST_CASE("oscillator metric: ad-invariant, Lorentz signature, self-inverse")
{
    auto K = catalog::oscillator_metric();
    CHECK(K.symmetry_ok());
    CHECK(is_ad_invariant(K, catalog::oscillator()));
    CHECK(K.m.signature() == std::make_pair(3, 1));
    CHECK(K.m.inverse() == K.m);
    // the euclidean part is not ad-invariant for aff(R)
    CHECK_FALSE(is_ad_invariant(BilinearForm(FormKind::Symmetric, RatMat::identity(2)),
                                catalog::aff_r()));
}

TEST_CASE("unimodularity of the catalog algebras")
{
    CHECK(is_unimodular(catalog::oscillator()));
    CHECK(is_unimodular(catalog::euclidean2()));
    CHECK(is_unimodular(catalog::heisenberg()));
    CHECK_FALSE(is_unimodular(catalog::aff_r()));
    for (const auto& a : kAlpha) {
        CHECK(is_unimodular(catalog::dual_oscillator({a, 1, 0})));
        CHECK(is_unimodular(catalog::dual_oscillator({0, a, a})));
    }
}

TEST_CASE("metric connection test on the affine hyperbolic form")
{
    CHECK(levi_civita_check(catalog::aff_iso1(), catalog::aff_lorentz()).ok);
    // the second isotropy product is not metric for it
    CHECK_FALSE(levi_civita_check(catalog::aff_iso2(), catalog::aff_lorentz()).ok);
}
