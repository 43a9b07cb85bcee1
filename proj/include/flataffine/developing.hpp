#pragma once

#include "flataffine/algebra.hpp"
#include "flataffine/groups.hpp"

#include <map>

namespace flataffine {

/// A charted group together with a flat torsion-free connection given by its
/// coefficients in the left-invariant frame.
struct FlatAffineGroup {
    ChartedGroup group;
    ProductTable connection;
};

/// Validates compatibility with the group's bracket and the operator
/// relations [L_x, L_y] = L_{[x,y]} (equivalently: flat and torsion-free).
FlatAffineGroup make_flat_affine(ChartedGroup g, ProductTable connection);

/// Piecewise-linear path in chart coordinates.
struct PathSpec {
    std::vector<Point> waypoints; // at least two

    static PathSpec segment(Point from, Point to);
    static PathSpec through(std::vector<Point> pts);
};

struct DevelopOptions {
    double tol = 1e-8;
    std::size_t base_steps = 8;     // initial steps per segment
    std::size_t max_doublings = 14; // Richardson refinement budget
};

struct DevelopmentResult {
    Point value;          // D(x) in T_p, p the path start
    double error = 0;     // Richardson estimate of the quadrature error
    std::size_t steps = 0;
};

struct TransportResult {
    Eigen::MatrixXd coframe;        // maps frame components at the endpoint to T_p
    Point development;              // integral of the parallel coframe along the path
    std::vector<Point> checkpoints; // development value at every waypoint
    double error = 0;
    std::size_t steps = 0;
};

/// Fused fourth-order integration of the transported coframe W and the
/// development integral D along the path, with step halving until the
/// Richardson error estimate meets opts.tol:
///   W' = W C(u),  D' = W u,  C(u)^k_j = sum_i u^i p^k_{ij},
/// where u(t) are the frame components of the path velocity.
TransportResult integrate_development(const FlatAffineGroup& fa, const PathSpec& path,
                                      const DevelopOptions& opts = {});

/// Transports frame components v from the path start to its end:
/// X' = -C(u) X.
Point parallel_transport(const FlatAffineGroup& fa, const PathSpec& path, const Point& v,
                         const DevelopOptions& opts = {});

/// Development D(x) along the coordinate segment from the identity.
DevelopmentResult develop(const FlatAffineGroup& fa, const Point& x,
                          const DevelopOptions& opts = {});

enum class DevelopingFamily { aff1, aff2, osc1, osc2, osc3, osc4 };

/// Closed-form developing maps. Parameters: aff1/aff2 take "alpha" (branch
/// dispatch at the special values), osc1 takes "t","s", osc2 takes
/// "alpha" (nonzero) and "t", osc3 and osc4 take none. osc4 evaluates the
/// reference formula table verbatim and rejects x4 = 0, where its
/// denominators are only removably singular.
Point closed_form_development(DevelopingFamily fam,
                              const std::map<std::string, double>& params, const Point& x);

struct GeodesicResult {
    std::vector<double> times;
    std::vector<Point> points;
    std::vector<Point> velocities; // frame components u(t)
    bool exited = false;           // left the chart / blew up before T
    double exit_time = 0;
};

/// Fixed-step fourth-order integration of u' = -C(u) u, x' = frame(x) u,
/// stopping early when the trajectory leaves the chart or stops being finite.
GeodesicResult geodesic(const FlatAffineGroup& fa, const Point& start, const Point& v0,
                        double T, std::size_t steps);

/// Max distance of the points to their best-fit line, relative to the total
/// polyline length.
double collinearity_residual(const std::vector<Point>& pts);

/// The affine pair (Q, L) with Q = D(F(p)) and L the differential of F at the
/// identity read through the parallel coframe.
struct AffineRep {
    Point Q;
    Eigen::MatrixXd L;
};

AffineRep affine_rep(const FlatAffineGroup& fa, const CoordinateMap& F,
                     const DevelopOptions& opts = {});

/// max over samples of || D(F(x)) - (Q + L D(x)) ||_inf.
double affine_diagram_residual(const FlatAffineGroup& fa, const CoordinateMap& F,
                               const AffineRep& rep, const std::vector<Point>& samples,
                               const DevelopOptions& opts = {});

/// Geodesic-preservation test of affinity: integrates geodesics from the
/// given starts, maps the samples through f, and accepts iff the development
/// of every mapped trajectory advances by equal increments (i.e. stays an
/// affinely parameterized straight line).
bool affine_map_check(const CoordinateMap& f, const ProductTable& P,
                      const ChartedGroup& group, const std::vector<Point>& starts,
                      double tol = 1e-6);

} // namespace flataffine
