#include <doctest.h>

#include "flataffine/catalog.hpp"
#include "flataffine/symplectic.hpp"

#include <random>

using namespace flataffine;

namespace {

const std::vector<std::array<Rational, 3>> kAlphaGrid = {
    {1, 1, 0}, {0, 0, 1}, {2, -1, 3}, {-1, Rational(1, 2), 2}, {0, 0, 0}};

SymplecticForm dual_form() { return SymplecticForm(catalog::dual_omega().m); }

} // namespace

TEST_CASE("the dual form is symplectic for every dual algebra")
{
    for (const auto& a : kAlphaGrid) {
        auto rep = symplectic_check(dual_form(), catalog::dual_oscillator(a));
        CHECK(rep.antisymmetric);
        CHECK(rep.nondegenerate);
        CHECK(rep.cocycle);
    }
}

TEST_CASE("degenerate and non-closed forms are flagged")
{
    // odd dimension: antisymmetric forms are always degenerate
    RatMat m3(3, 3);
    m3(0, 1) = 1;
    m3(1, 0) = -1;
    auto rep = symplectic_check(SymplecticForm(m3), catalog::euclidean2());
    CHECK_FALSE(rep.nondegenerate);

    // e0* ^ e1* + e2* ^ d* on the oscillator fails the cocycle identity:
    // w([e2,d], e0) = w(e1, e0) = -1
    RatMat m4(4, 4);
    m4(0, 1) = 1;
    m4(1, 0) = -1;
    m4(2, 3) = 1;
    m4(3, 2) = -1;
    auto rep4 = symplectic_check(SymplecticForm(m4), catalog::oscillator());
    CHECK(rep4.nondegenerate);
    CHECK_FALSE(rep4.cocycle);
    REQUIRE_FALSE(rep4.cocycle_violations.empty());
    CHECK(rep4.cocycle_violations.front() == std::make_tuple(0u, 2u, 3u));

    // a symmetric matrix is reported, not silently accepted
    auto bad = symplectic_check(SymplecticForm(RatMat::identity(2)), catalog::aff_r());
    CHECK_FALSE(bad.antisymmetric);
}

TEST_CASE("product induced by the dual symplectic form")
{
    for (const auto& a : kAlphaGrid) {
        auto L = catalog::dual_oscillator(a);
        auto w = dual_form();
        auto sp = product_from_symplectic(w, L);

        // defining identity on all basis triples
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = 0; y < 4; ++y)
                for (std::size_t z = 0; z < 4; ++z) {
                    std::vector<Rational> ex(4), ey(4), ez(4);
                    ex[x] = 1;
                    ey[y] = 1;
                    ez[z] = 1;
                    CHECK(w.form.eval(sp.mul(ex, ey), ez) ==
                          -w.form.eval(ey, L.bracket(ex, ez)));
                }

        CHECK(is_left_symmetric(sp).ok);
        CHECK(is_compatible(sp, L).ok);
        CHECK(commutator_bracket(sp) == L);
        CHECK(completeness_trace_check(sp));

        // e0* e0* = -a1 e1* - a2 e2*
        CHECK(sp.p(0, 0, 1) == -a[0]);
        CHECK(sp.p(0, 0, 2) == -a[1]);
        CHECK(sp.p(0, 0, 0) == 0);
        CHECK(sp.p(0, 0, 3) == 0);
    }
}

TEST_CASE("the symplectic product differs from the coadjoint one when a3 != 0")
{
    auto sp = product_from_symplectic(dual_form(), catalog::dual_oscillator({0, 0, 1}));
    CHECK_FALSE(sp == catalog::dual_oscillator_product({0, 0, 1}));
}

TEST_CASE("hess connection of the affine split")
{
    auto L = catalog::aff_r();
    SymplecticForm w(catalog::aff_omega().m);
    CHECK(symplectic_check(w, L).ok());

    CHECK(product_from_symplectic(w, L) == catalog::aff_odot());

    LagrangianSplit split{{0}, {1}};
    CHECK_NOTHROW(validate_split(split, w, L));
    CHECK_THROWS_AS(validate_split(LagrangianSplit{{0, 1}, {}}, w, L),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_split(LagrangianSplit{{0}, {0}}, w, L),
                    std::invalid_argument);

    auto hess = hess_connection(w, L, split);
    CHECK(hess == catalog::aff_iso1());
    CHECK(is_flat(hess, L));
    CHECK(is_torsion_free(hess, L));
    CHECK(levi_civita_check(hess, catalog::aff_lorentz()).ok);
}

TEST_CASE("hess connection of a dual split is flat and torsion-free")
{
    // at (1,0,0) both spans {e0*, e1*} and {e2*, d*} are abelian subalgebras
    auto L = catalog::dual_oscillator({1, 0, 0});
    auto w = dual_form();
    LagrangianSplit split{{0, 1}, {2, 3}};
    CHECK_NOTHROW(validate_split(split, w, L));
    auto hess = hess_connection(w, L, split);
    CHECK(is_flat(hess, L));
    CHECK(is_torsion_free(hess, L));
    CHECK(is_left_symmetric(hess).ok);
}

TEST_CASE("symplectomorphism residuals of the catalog maps")
{
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> X(0.6, 2.4), Y(-1.0, 1.0);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 25; ++i)
        pts.push_back({X(rng), Y(rng)});

    CHECK(symplectomorphism_residual(catalog::identity_map({"x", "y"}), pts) < 1e-9);
    CHECK(symplectomorphism_residual(catalog::map_g(), pts) < 1e-8);
    CHECK(symplectomorphism_residual(catalog::map_f(1.7, "0.3 + 0.1*sin(y)"), pts) <
          1e-8);
    CHECK(symplectomorphism_residual(catalog::map_F(1.3, 0.4, 0.2), pts) < 1e-8);
    CHECK(symplectomorphism_residual(catalog::map_G(0.8, -0.6, 1.1), pts) < 1e-8);
    // h is built to solve the equation for any positive p and any l
    CHECK(symplectomorphism_residual(catalog::map_h("x^2", "2*x", "sin(x)"), pts) <
          1e-7);

    // (x e^y, e^y / x) is not one: the residual at x = 1 is |2/x - 1| = 1
    auto not_symp = parse_coordinate_map("x*exp(y), exp(y)/x", {"x", "y"});
    CHECK(symplectomorphism_residual(not_symp, std::vector<double>{1.0, 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(symplectomorphism_residual(not_symp, pts) > 0.1);
}
