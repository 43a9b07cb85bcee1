#include <doctest.h>

#include "flataffine/catalog.hpp"
#include "flataffine/groups.hpp"

#include <random>

using namespace flataffine;

namespace {

std::vector<ChartedGroup> all_models()
{
    std::vector<ChartedGroup> out;
    out.push_back(heisenberg());
    out.push_back(oscillator());
    out.push_back(euclidean_e2());
    out.push_back(aff_r());
    out.push_back(dual_group(DualCase::abelian, {0, 0, 0}));
    out.push_back(dual_group(DualCase::heisenberg_x_line, {1, 0, 0}));
    out.push_back(dual_group(DualCase::central_ext, {1, 1, 0}));
    out.push_back(dual_group(DualCase::cplx_semidirect, {1, 1, 2}));
    out.push_back(central_ext_chart());
    out.push_back(cplx_semidirect_chart(2));
    return out;
}

} // namespace

TEST_CASE("group axioms hold numerically in every chart")
{
    std::mt19937 rng(20240615);
    for (const auto& g : all_models()) {
        CAPTURE(g.name);
        REQUIRE(check_jacobi(g.algebra).ok);
        // frame at the identity is the identity matrix
        Eigen::MatrixXd f0 = g.frame(g.identity);
        CHECK((f0 - Eigen::MatrixXd::Identity(g.dim, g.dim)).cwiseAbs().maxCoeff() <
              1e-12);
        for (int it = 0; it < 10; ++it) {
            Point a = g.sample(rng), b = g.sample(rng), c = g.sample(rng);
            CHECK(identity_residual(g, a) < 1e-9);
            CHECK(inverse_residual(g, a) < 1e-9);
            CHECK(associativity_residual(g, a, b, c) < 1e-9);
        }
    }
}

TEST_CASE("frames are left-invariant with the declared structure constants")
{
    std::mt19937 rng(911);
    for (const auto& g : all_models()) {
        CAPTURE(g.name);
        for (int it = 0; it < 4; ++it) {
            Point a = g.sample(rng), x = g.sample(rng);
            CHECK(left_invariance_residual(g, a, x) < 2e-5);
            CHECK(frame_structure_residual(g, x) < 2e-5);
        }
    }
}

TEST_CASE("dual group models carry the dual oscillator algebra")
{
    CHECK(dual_group(DualCase::cplx_semidirect, {2, -1, 3}).algebra ==
          catalog::dual_oscillator({2, -1, 3}));
    CHECK(dual_group(DualCase::central_ext, {1, 1, 0}).algebra ==
          catalog::dual_oscillator({1, 1, 0}));
}

TEST_CASE("dual group case tags are validated")
{
    CHECK_THROWS_AS(dual_group(DualCase::abelian, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(dual_group(DualCase::heisenberg_x_line, {1, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dual_group(DualCase::heisenberg_x_line, {1, 0, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dual_group(DualCase::central_ext, {1, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dual_group(DualCase::cplx_semidirect, {1, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cplx_semidirect_chart(0), std::invalid_argument);
}

TEST_CASE("projection onto the euclidean group is a homomorphism")
{
    auto pi = oscillator_projection();
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        Point a = pi.source.sample(rng), b = pi.source.sample(rng);
        CHECK(hom_residual(pi, a, b) < 1e-9);
    }
}

TEST_CASE("the section splits the projection but is not a homomorphism")
{
    auto pi = oscillator_projection();
    auto s = e2_section();
    std::mt19937 rng(8);
    for (int it = 0; it < 20; ++it) {
        Point p = pi.target.sample(rng);
        auto up = s(p);
        REQUIRE(up.size() == 4);
        auto back = pi.map(up);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(back[i] == doctest::Approx(p[i]).epsilon(1e-12));
    }
    GroupHom lift{pi.target, pi.source, s};
    // the central coordinate of s(a)s(b) picks up the area term
    CHECK(hom_residual(lift, {0.5, 1.0, 0.0}, {0.3, 0.0, 1.0}) > 1e-4);
}

TEST_CASE("oscillator models for different parameters are intertwined")
{
    CHECK(lambda_independence_check(1.0, 2.0));
    CHECK(lambda_independence_check(2.0, 3.0));
    CHECK(lambda_independence_check(1.0, 1.0));
    // the identity map does not intertwine different rotation speeds
    CHECK_FALSE(lambda_independence_check(
        1.0, 2.0, [](const Point& p) { return p; }, 1e-9));
    CHECK_THROWS_AS(lambda_independence_check(-1.0, 2.0), std::invalid_argument);
}
