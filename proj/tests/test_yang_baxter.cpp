#include <doctest.h>

#include "flataffine/catalog.hpp"
#include "flataffine/yang_baxter.hpp"

using namespace flataffine;

namespace {

const std::vector<std::array<Rational, 3>> kAlphaGrid = {
    {0, 0, 0},         {1, 0, 0}, {0, 1, 0},  {0, 0, 1},
    {1, 1, 0},         {2, -1, 3}, {-1, Rational(1, 2), 2},
    {0, Rational(3, 4), -2}};

} // namespace

TEST_CASE("oscillator bivectors solve the classical Yang-Baxter equation")
{
    for (const auto& a : kAlphaGrid) {
        auto rv = catalog::oscillator_r(a);
        CHECK(cybe_check(rv).ok);
    }
}

TEST_CASE("r-sharp is the transpose action")
{
    auto rv = catalog::oscillator_r({2, -1, 3});
    auto sharp = r_sharp(rv);
    CHECK(sharp == rv.r.transposed());
    // beta(r# alpha) = r(alpha, beta) on random-ish covectors
    LinearForm a = {1, Rational(-1, 2), 0, 3};
    LinearForm b = {0, 2, 1, Rational(1, 3)};
    auto sa = sharp.apply(a);
    Rational pairing = 0;
    for (std::size_t i = 0; i < 4; ++i)
        pairing += b[i] * sa[i];
    CHECK(pairing == rv.eval(a, b));
    CHECK(rv.eval(a, b) == -rv.eval(b, a));
}

TEST_CASE("a bivector violating the equation is rejected")
{
    // r = e1 ^ d on the euclidean algebra: the cyclic sum is nonzero
    RatMat m(3, 3);
    m(0, 2) = 1;
    m(2, 0) = -1;
    Bivector bad(catalog::euclidean2(), m);
    auto rep = cybe_check(bad);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.violations.front() == std::make_tuple(0u, 1u, 2u));
    CHECK_THROWS_AS(dual_structures(bad), std::invalid_argument);
}

TEST_CASE("coadjoint action against the bracket")
{
    auto L = catalog::oscillator();
    // (ad*_d eps^2)(y) = -eps^2([d, y]); [d,e1] = e2 gives -eps^1
    auto op = coadjoint(L, {0, 0, 0, 1});
    auto img = op.apply({0, 0, 1, 0});
    CHECK(img == std::vector<Rational>{0, -1, 0, 0});
}

TEST_CASE("dual tables match the catalog for every parameter choice")
{
    for (const auto& a : kAlphaGrid) {
        auto pack = dual_structures(catalog::oscillator_r(a));
        CHECK(pack.bracket == catalog::dual_oscillator(a));
        CHECK(pack.product == catalog::dual_oscillator_product(a));
        // the product induces the bracket as its commutator
        CHECK(commutator_bracket(pack.product) == pack.bracket);
        CHECK(is_left_symmetric(pack.product).ok);
        CHECK(check_jacobi(pack.bracket).ok);
        // dual algebras here are unimodular, hence the structures are complete
        CHECK(is_unimodular(pack.bracket));
        CHECK(completeness_trace_check(pack.product));
    }
}

TEST_CASE("double algebra: bracket, pairing, signature, isotropy")
{
    const std::array<Rational, 3> a = {2, -1, 3};
    auto dbl = double_algebra(catalog::oscillator_r(a));
    REQUIRE(dbl.bracket.dim() == 8);
    CHECK(check_jacobi(dbl.bracket).ok);
    CHECK(is_ad_invariant(dbl.pairing, dbl.bracket));
    CHECK(dbl.pairing.m.signature() == std::make_pair(4, 4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(dbl.pairing.m(i, j) == 0);
            CHECK(dbl.pairing.m(4 + i, 4 + j) == 0);
        }
    // hyperbolic pairing of e_i with e_i*
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(dbl.pairing.m(i, 4 + i) == 1);

    // original bracket sits in the first block: [e1, e2] = e0
    CHECK(dbl.bracket.c(1, 2, 0) == 1);
    // dual bracket sits in the second block
    CHECK(dbl.bracket.c(4, 5, 7) == -a[1]);
    CHECK(dbl.bracket.c(4, 5, 6) == a[2]);
    CHECK(dbl.bracket.c(4, 6, 7) == a[0]);
    CHECK(dbl.bracket.c(4, 6, 5) == -a[2]);
}

TEST_CASE("double algebra: frozen mixed brackets")
{
    const Rational a1 = 2, a2 = -1, a3 = 3;
    auto dbl = double_algebra(catalog::oscillator_r({a1, a2, a3}));
    auto expect = [&](std::size_t i, std::size_t j, std::vector<Rational> v) {
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(dbl.bracket.c(i, j, k) == v[k]);
    };
    // [e1, e0*] = -a3 e2 - e2*
    expect(1, 4, {0, 0, -a3, 0, 0, 0, -1, 0});
    // [e2, e0*] = a3 e1 + e1*
    expect(2, 4, {0, a3, 0, 0, 0, 1, 0, 0});
    // [d, e0*] = -a2 e1 + a1 e2
    expect(3, 4, {0, -a2, a1, 0, 0, 0, 0, 0});
    // [e2, e1*] = -a3 e0 - d*
    expect(2, 5, {-a3, 0, 0, 0, 0, 0, 0, -1});
    // [e1, e2*] = a3 e0 + d*
    expect(1, 6, {a3, 0, 0, 0, 0, 0, 0, 1});
    // [d, e2*] = -a1 e0 - e1*
    expect(3, 6, {-a1, 0, 0, 0, 0, -1, 0, 0});
    // [d, e1*] = a2 e0 + e2*: the sign of the e2* term is forced by
    // invariance, <[d,e1*],e2> = -<e1*,[d,e2]> = <e1*,e1> = 1
    expect(3, 5, {a2, 0, 0, 0, 0, 0, 1, 0});
    // e0 is central in the double as well
    for (std::size_t j = 4; j < 8; ++j)
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(dbl.bracket.c(0, j, k) == 0);
    // [e1, e1*] and [e2, e2*] vanish too
    expect(1, 5, std::vector<Rational>(8, 0));
    expect(2, 6, std::vector<Rational>(8, 0));
}

TEST_CASE("dual metric of the oscillator metric")
{
    auto K = catalog::oscillator_metric();
    auto Kd = dual_metric(K);
    CHECK(Kd.m == K.m); // the Gram matrix is its own inverse
    CHECK(Kd.symmetry_ok());
    CHECK_THROWS_AS(dual_metric(BilinearForm(FormKind::Symmetric, RatMat(2, 2))),
                    std::domain_error);
    // the dual product is metric for the induced metric, for every parameter
    for (const auto& a : kAlphaGrid)
        CHECK(levi_civita_check(catalog::dual_oscillator_product(a), Kd).ok);
}
