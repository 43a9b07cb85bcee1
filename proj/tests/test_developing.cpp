#include <doctest.h>

#include "flataffine/catalog.hpp"
#include "flataffine/developing.hpp"

#include <cmath>

using namespace flataffine;

namespace {

double linf(const Point& a, const Point& b)
{
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

DevelopOptions tight()
{
    DevelopOptions o;
    o.tol = 1e-10;
    return o;
}

} // namespace

TEST_CASE("make_flat_affine validates the connection against the group")
{
    CHECK_NOTHROW(make_flat_affine(aff_r(), catalog::aff_nabla1(1)));
    // the zero product is not compatible with a nonabelian bracket
    CHECK_THROWS_AS(make_flat_affine(aff_r(), ProductTable(2, {"e1", "e2"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_flat_affine(aff_r(), catalog::e2_F3()),
                    std::invalid_argument);
}

TEST_CASE("developments agree with the closed forms at pinned points")
{
    SUBCASE("second affine family at alpha = 0 is the logarithm")
    {
        auto fa = make_flat_affine(aff_r(), catalog::aff_nabla2(0));
        auto dev = develop(fa, {2.0, 1.0}, tight());
        CHECK(dev.value[0] == doctest::Approx(std::log(2.0)).epsilon(1e-8));
        CHECK(dev.value[1] == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("first oscillator family at t = s = 1")
    {
        auto fa = make_flat_affine(oscillator(), catalog::osc_F1(1, 1));
        auto dev = develop(fa, {1.0, 2.0, 3.0, 4.0}, tight());
        Point expect = {15.5, 2.0, 3.0, 4.0};
        CHECK(linf(dev.value, expect) < 1e-7);
        CHECK(linf(closed_form_development(DevelopingFamily::osc1,
                                           {{"t", 1.0}, {"s", 1.0}}, {1, 2, 3, 4}),
                   expect) < 1e-12);
    }
    SUBCASE("third oscillator family fixes the identity")
    {
        auto fa = make_flat_affine(oscillator(), catalog::osc_F3());
        auto dev = develop(fa, {0.0, 0.0, 0.0, 0.0}, tight());
        CHECK(linf(dev.value, {0, 0, 0, 0}) < 1e-12);
    }
}

TEST_CASE("developments match the closed forms across the families")
{
    struct Case {
        FlatAffineGroup fa;
        DevelopingFamily fam;
        std::map<std::string, double> params;
        std::vector<Point> pts;
    };
    std::vector<Case> cases;
    for (double a : {0.5, 1.0, 2.0})
        cases.push_back({make_flat_affine(aff_r(), catalog::aff_nabla1(parse_rational(
                                                       std::to_string(a)))),
                         DevelopingFamily::aff1,
                         {{"alpha", a}},
                         {{1.5, -0.4}, {0.7, 0.9}}});
    for (double a : {-1.0, 0.0, 2.0})
        cases.push_back({make_flat_affine(aff_r(), catalog::aff_nabla2(parse_rational(
                                                       std::to_string(a)))),
                         DevelopingFamily::aff2,
                         {{"alpha", a}},
                         {{2.2, 0.3}, {0.6, -1.1}}});
    cases.push_back({make_flat_affine(oscillator(), catalog::osc_F1(1, Rational(3, 2))),
                     DevelopingFamily::osc1,
                     {{"t", 1.0}, {"s", 1.5}},
                     {{-1.0, 0.3, 1.2, -0.6}, {0.4, -0.8, 0.0, 1.0}}});
    cases.push_back({make_flat_affine(oscillator(), catalog::osc_F2(2, 1)),
                     DevelopingFamily::osc2,
                     {{"alpha", 2.0}, {"t", 1.0}},
                     {{0.5, -0.3, 0.8, 0.2}}});
    cases.push_back({make_flat_affine(oscillator(), catalog::osc_F3()),
                     DevelopingFamily::osc3,
                     {},
                     {{1.0, -0.5, 0.7, 1.3}}});

    for (const auto& c : cases)
        for (const auto& p : c.pts) {
            auto dev = develop(c.fa, p, tight());
            auto cf = closed_form_development(c.fam, c.params, p);
            CAPTURE(p[0]);
            CHECK(linf(dev.value, cf) < 1e-6);
            CHECK(dev.error < 1e-9);
        }
}

TEST_CASE("the fourth-family reference formulas disagree with the development")
{
    // The integrated development is the trustworthy object here: the
    // reference closed form fails to be the identity coframe at the origin,
    // and the gap is far above integration error.
    auto fa = make_flat_affine(oscillator(), catalog::osc_F4());
    Point x = {0.5, 0.7, -0.4, 0.9};
    auto dev = develop(fa, x, tight());
    auto cf = closed_form_development(DevelopingFamily::osc4, {}, x);
    CHECK(dev.error < 1e-9);
    CHECK(linf(dev.value, cf) > 1e-6);
    CHECK_THROWS_AS(closed_form_development(DevelopingFamily::osc4, {}, {0, 0, 0, 0}),
                    std::domain_error);
}

TEST_CASE("development is path independent")
{
    auto fa = make_flat_affine(oscillator(), catalog::osc_F1(1, Rational(3, 2)));
    Point x = {0.7, -0.4, 1.1, 0.6};
    auto direct = integrate_development(
        fa, PathSpec::segment(fa.group.identity, x), tight());
    auto detour = integrate_development(
        fa, PathSpec::through({fa.group.identity, {-0.5, 0.8, 0.2, -0.9}, x}), tight());
    CHECK(linf(direct.development, detour.development) < 1e-7);
    CHECK(direct.checkpoints.size() == 2);
    CHECK(detour.checkpoints.size() == 3);
}

TEST_CASE("parallel transport along a closed zero-connection path is trivial")
{
    auto g = dual_group(DualCase::abelian, {0, 0, 0});
    auto fa = make_flat_affine(g, ProductTable(4, g.algebra.labels()));
    Point v = {1.0, -2.0, 0.5, 3.0};
    auto moved = parallel_transport(
        fa, PathSpec::through({{0, 0, 0, 0}, {1, 0.5, -1, 2}, {-1, 1, 1, 0}}), v,
        tight());
    CHECK(linf(moved, v) < 1e-10);
}

TEST_CASE("geodesics develop onto straight lines")
{
    auto fa = make_flat_affine(oscillator(), catalog::osc_F3());
    auto geo = geodesic(fa, fa.group.identity, {0.3, -0.2, 0.5, 0.1}, 2.0, 240);
    REQUIRE_FALSE(geo.exited);
    std::vector<Point> img;
    for (std::size_t i = 0; i < geo.points.size(); i += 24)
        img.push_back(develop(fa, geo.points[i], tight()).value);
    CHECK(collinearity_residual(img) < 1e-7);
}

TEST_CASE("an incomplete structure shows a finite-time chart exit")
{
    auto fa = make_flat_affine(aff_r(), catalog::aff_nabla2(2));
    auto geo = geodesic(fa, {1.0, 0.0}, {-1.0, 0.0}, 2.0, 4096);
    REQUIRE(geo.exited);
    // u(t) = -1/(1-2t) e1 drives x1(t) = sqrt(1-2t) to the chart boundary
    CHECK(geo.exit_time > 0.3);
    CHECK(geo.exit_time < 0.7);
}

TEST_CASE("affinity of the isotropy maps via the affine pair")
{
    auto fa = make_flat_affine(aff_r(), catalog::aff_iso1());
    auto F = catalog::map_F(1.3, 0.4, 0.2);
    auto rep = affine_rep(fa, F, tight());
    std::vector<Point> samples = {{0.7, -0.8}, {1.0, 0.0}, {1.6, 0.9}, {2.2, -0.3}};
    CHECK(affine_diagram_residual(fa, F, rep, samples, tight()) < 1e-7);
    CHECK(affine_map_check(F, fa.connection, fa.group, {{1.0, 0.0}, {1.5, -0.5}}));

    auto squash = parse_coordinate_map("x^2, y", {"x", "y"});
    auto bad_rep = affine_rep(fa, squash, tight());
    CHECK(affine_diagram_residual(fa, squash, bad_rep, samples, tight()) > 1e-4);
    CHECK_FALSE(affine_map_check(squash, fa.connection, fa.group,
                                 {{1.0, 0.0}, {1.5, -0.5}}));
}
