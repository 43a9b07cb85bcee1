#include <doctest.h>

#include "flataffine/catalog.hpp"
#include "flataffine/cohomology.hpp"

using namespace flataffine;

namespace {

// 3x3 matrix unit E(i,j) over the basis (e1, e2, d)
RatMat E(std::size_t i, std::size_t j)
{
    RatMat m(3, 3);
    m(i, j) = 1;
    return m;
}

RatMat lin(std::initializer_list<std::pair<RatMat, Rational>> terms)
{
    RatMat out(3, 3);
    for (const auto& [m, c] : terms)
        out = out + m * c;
    return out;
}

// The span of `space` equals the span of `expected` (as flattened cochains).
void check_span_is(const CochainSpace& space, const std::vector<RatMat>& expected)
{
    auto flat = space.flattened();
    REQUIRE(space.rank() == expected.size());
    std::vector<std::vector<Rational>> exp_flat;
    for (const auto& m : expected) {
        CHECK(in_span(flat, flatten_cochain(m)));
        exp_flat.push_back(flatten_cochain(m));
    }
    CHECK(span_rank(exp_flat) == expected.size());
}

} // namespace

TEST_CASE("cohomology of the euclidean families, frozen spans")
{
    SUBCASE("first family at alpha = 0")
    {
        auto res = cohomology(catalog::e2_F1(0));
        CHECK(res.dim_h2 == 3);
        check_span_is(res.cocycles,
                      {lin({{E(0, 0), 1}, {E(1, 1), 1}}),
                       lin({{E(0, 1), 1}, {E(1, 0), -1}}), E(2, 0), E(2, 1), E(2, 2)});
        check_span_is(res.coboundaries, {E(2, 0), E(2, 1)});
    }
    SUBCASE("first family at alpha = 2 is rigid")
    {
        const Rational a(2);
        auto res = cohomology(catalog::e2_F1(a));
        CHECK(res.dim_h2 == 0);
        std::vector<RatMat> zb = {
            lin({{E(0, 2), 1}, {E(2, 0), 1}, {E(2, 1), -1 / a}}),
            lin({{E(1, 2), 1}, {E(2, 0), 1 / a}, {E(2, 1), 1}}), E(2, 2)};
        check_span_is(res.cocycles, zb);
        check_span_is(res.coboundaries, zb);
    }
    SUBCASE("second family")
    {
        auto res = cohomology(catalog::e2_F2(1));
        CHECK(res.dim_h2 == 2);
        CHECK(res.cocycles.rank() == 5);
        check_span_is(res.coboundaries, {E(2, 0), E(2, 1), E(2, 2)});
    }
    SUBCASE("third family")
    {
        auto res = cohomology(catalog::e2_F3());
        CHECK(res.dim_h2 == 1);
        check_span_is(res.cocycles, {lin({{E(0, 0), 1}, {E(1, 1), 1}}),
                                     lin({{E(0, 1), 1}, {E(1, 0), -1}}), E(2, 0),
                                     E(2, 1)});
        check_span_is(res.coboundaries,
                      {lin({{E(0, 0), 1}, {E(1, 1), 1}}), E(2, 0), E(2, 1)});
    }
    SUBCASE("fourth family")
    {
        auto res = cohomology(catalog::e2_F4());
        CHECK(res.dim_h2 == 1);
        check_span_is(
            res.cocycles,
            {lin({{E(0, 0), 1}, {E(1, 1), 1}, {E(0, 2), 1}, {E(1, 2), 2}}),
             lin({{E(0, 1), 1}, {E(1, 0), -1}, {E(0, 2), 2}, {E(1, 2), -1}}),
             lin({{E(2, 0), 1}, {E(2, 2), 1}}), lin({{E(2, 1), 1}, {E(2, 2), 2}})});
        CHECK(res.coboundaries.rank() == 3);
    }
}

TEST_CASE("representatives are cocycles and complete the coboundaries")
{
    const std::vector<ProductTable> tables = {catalog::e2_F1(0), catalog::e2_F2(1),
                                              catalog::e2_F3(), catalog::e2_F4()};
    for (const auto& P : tables) {
        auto res = cohomology(P);
        CHECK(res.representatives.size() == res.dim_h2);
        auto span = res.coboundaries.flattened();
        for (const auto& rep : res.representatives) {
            CHECK(is_cocycle(P, rep));
            CHECK_FALSE(in_span(span, flatten_cochain(rep)));
            span.push_back(flatten_cochain(rep));
        }
        CHECK(span_rank(span) == res.cocycles.rank());
    }
}

TEST_CASE("zero product in dimension two has full scalar cohomology")
{
    auto res = cohomology(ProductTable(2, {"a", "b"}));
    CHECK(res.cocycles.rank() == 4);
    CHECK(res.coboundaries.rank() == 0);
    CHECK(res.dim_h2 == 4);
}

TEST_CASE("oscillator families are central extensions of the euclidean ones")
{
    const Rational q(1, 2);

    SUBCASE("first family")
    {
        const Rational t(2), s(-1);
        RatMat g(3, 3);
        g(0, 0) = t;
        g(1, 1) = t;
        g(0, 1) = q;
        g(1, 0) = -q;
        g(2, 2) = s;
        REQUIRE(is_cocycle(catalog::e2_F1(0), g));
        CHECK(central_extension(catalog::e2_F1(0), g, "e0") == catalog::osc_F1(t, s, q));
    }
    SUBCASE("second family")
    {
        const Rational a(3), t(1);
        RatMat g(3, 3);
        g(0, 0) = t;
        g(1, 1) = t;
        g(0, 1) = q;
        g(1, 0) = -q;
        REQUIRE(is_cocycle(catalog::e2_F2(a), g));
        CHECK(central_extension(catalog::e2_F2(a), g, "e0") == catalog::osc_F2(a, t, q));
    }
    SUBCASE("third family")
    {
        RatMat g(3, 3);
        g(0, 1) = q;
        g(1, 0) = -q;
        REQUIRE(is_cocycle(catalog::e2_F3(), g));
        CHECK(central_extension(catalog::e2_F3(), g, "e0") == catalog::osc_F3(q));
    }
    SUBCASE("the fourth oscillator family is not an extension of the fourth "
            "euclidean one")
    {
        // restricting the fourth oscillator product to (e1, e2, d) does not
        // reproduce the fourth euclidean table, so no choice of cocycle works
        auto osc = catalog::osc_F4(q);
        ProductTable lower(3, {"e1", "e2", "d"});
        for (const auto& [i, j, k, c] : osc.entries())
            if (i > 0 && j > 0 && k > 0)
                lower.set(i - 1, j - 1, k - 1, c);
        CHECK_FALSE(lower == catalog::e2_F4());
    }
}

TEST_CASE("central extension rejects non-cocycles")
{
    CHECK_THROWS_AS(central_extension(catalog::e2_F1(0), E(0, 2), "z"),
                    std::invalid_argument);
    CHECK_FALSE(is_cocycle(catalog::e2_F1(0), E(0, 2)));
}
