#pragma once

#include "flataffine/algebra.hpp"
#include "flataffine/expr.hpp"

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace flataffine {

using Point = std::vector<double>;

/// A Lie group in a single global chart: closed-form product, identity,
/// inverse, and the left-invariant frame field. Chart coordinate order
/// matches the basis order of `algebra`, so frame(identity) is the identity
/// matrix and the frame columns are the fields e_i+.
struct ChartedGroup {
    std::string name;
    std::size_t dim = 0;
    StructureConstants algebra;
    Point identity;
    std::function<bool(const Point&)> in_chart;
    std::function<Point(const Point&, const Point&)> product;
    std::function<Point(const Point&)> inverse;
    std::function<Eigen::MatrixXd(const Point&)> frame;
    std::function<Point(std::mt19937&)> sample; // random point inside the chart

    ChartedGroup() : algebra(0) {}
};

ChartedGroup heisenberg();
ChartedGroup oscillator();
/// Universal cover of E(2), charted by (t, x, y) with the angle t unwrapped.
ChartedGroup euclidean_e2();
/// Aff(R)_0 charted by (x, y) with x > 0; (x,y) acts as u -> xu + y.
ChartedGroup aff_r();

enum class DualCase { abelian, heisenberg_x_line, central_ext, cplx_semidirect };

/// Simply connected group of the dual algebra o*(r), r = a1 e0^e1 + a2 e0^e2
/// + a3 e0^d, in the uniform chart R x| R^3: (u,v)(u',v') = (u+u', v+e^{uA}v')
/// with A = ad_{e0*} restricted to span(e1*,e2*,d*). The frame brackets equal
/// the dual structure constants for every parameter choice. The case tag is
/// validated against the parameters.
ChartedGroup dual_group(DualCase c, const std::array<Rational, 3>& alpha);

/// The (x,y,z,w) chart with product first coordinate
/// x + x' + (w-z)y' + wz' + zw': realizes dual_group(central_ext, (1,1,0))
/// with coordinates reordered as (d*, e0*, e2*, e1*).
ChartedGroup central_ext_chart();

/// The (z1,z2,s,t) chart with product (z + e^{i a3 s} z', s+s', t+t'):
/// realizes dual_group(cplx_semidirect, (0,0,a3)) with coordinates
/// (e1*, e2*, e0*, d*).
ChartedGroup cplx_semidirect_chart(const Rational& a3);

struct GroupHom {
    ChartedGroup source, target;
    CoordinateMap map;
};

/// O -> E(2), (x1,x2,x3,x4) -> (x4,x2,x3); an exact homomorphism.
GroupHom oscillator_projection();
/// E(2) -> O section (t,x,y) -> (0,x,y,t); satisfies projection o section = id.
CoordinateMap e2_section();

// ---- numeric residuals ------------------------------------------------

double associativity_residual(const ChartedGroup& g, const Point& a, const Point& b,
                              const Point& c);
double identity_residual(const ChartedGroup& g, const Point& p);
double inverse_residual(const ChartedGroup& g, const Point& p);

/// || frame(a x) - J_{L_a}(x) frame(x) ||_inf with J the numeric Jacobian of
/// left translation by a.
double left_invariance_residual(const ChartedGroup& g, const Point& a, const Point& x);

double hom_residual(const GroupHom& h, const Point& a, const Point& b);

/// Structure constants extracted from the frame field at a point via numeric
/// Jacobian commutators: [e_i+, e_j+](p) resolved in the frame basis.
Eigen::MatrixXd frame_bracket(const ChartedGroup& g, const Point& p, std::size_t i,
                              std::size_t j); // returns column vector (dim x 1)

/// Max deviation of the numeric frame brackets from g.algebra at p.
double frame_structure_residual(const ChartedGroup& g, const Point& p);

/// Oscillator models O_l and O_l' are intertwined by phi(s,z) = (s, z^{l'/l}).
/// Verified in unwrapped polar coordinates (s, r, theta): both routes of the
/// diagram phi o rho(t) = rho'(t) o phi are compared at sample points with
/// theta on the principal branch. An alternative intertwiner candidate can be
/// supplied to exhibit failures.
bool lambda_independence_check(double lambda, double lambda_prime, double tol = 1e-9);
bool lambda_independence_check(double lambda, double lambda_prime,
                               const std::function<Point(const Point&)>& intertwiner,
                               double tol);

} // namespace flataffine
