#include "flataffine/groups.hpp"

#include <cmath>
#include <stdexcept>

namespace flataffine {

namespace {

double inf_norm(const Point& a, const Point& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

Point box_sample(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    Point p(n);
    for (auto& c : p) c = d(rng);
    return p;
}

bool all_finite(const Point& p) {
    for (double c : p)
        if (!std::isfinite(c)) return false;
    return true;
}

} // namespace

ChartedGroup heisenberg() {
    ChartedGroup g;
    g.name = "heisenberg";
    g.dim = 3;
    g.algebra = StructureConstants(3, {"e0", "e1", "e2"});
    g.algebra.set(1, 2, 0, 1); // [e1,e2] = e0
    g.identity = {0, 0, 0};
    g.in_chart = [](const Point& p) { return all_finite(p); };
    // (s,w)(s',w') = (s + s' + Im(conj(w) w')/2, w + w'), w = x + iy
    g.product = [](const Point& a, const Point& b) -> Point {
        return {a[0] + b[0] + 0.5 * (a[1] * b[2] - a[2] * b[1]), a[1] + b[1], a[2] + b[2]};
    };
    g.inverse = [](const Point& p) -> Point { return {-p[0], -p[1], -p[2]}; };
    g.frame = [](const Point& p) {
        Eigen::MatrixXd f = Eigen::MatrixXd::Identity(3, 3);
        f(0, 1) = -p[2] / 2;
        f(0, 2) = p[1] / 2;
        return f;
    };
    g.sample = [](std::mt19937& rng) { return box_sample(rng, 3, -2.0, 2.0); };
    return g;
}

ChartedGroup oscillator() {
    ChartedGroup g;
    g.name = "oscillator";
    g.dim = 4;
    g.algebra = StructureConstants(4, {"e0", "e1", "e2", "d"});
    g.algebra.set(1, 2, 0, 1);  // [e1,e2] = e0
    g.algebra.set(3, 1, 2, 1);  // [d,e1] = e2
    g.algebra.set(3, 2, 1, -1); // [d,e2] = -e1
    g.identity = {0, 0, 0, 0};
    g.in_chart = [](const Point& p) { return all_finite(p); };
    // (s, z, t)(s', z', t') = (s + s' + Im(conj(z) e^{it} z')/2, z + e^{it} z', t + t')
    g.product = [](const Point& a, const Point& b) -> Point {
        double c = std::cos(a[3]), s = std::sin(a[3]);
        double wx = b[1] * c - b[2] * s;
        double wy = b[1] * s + b[2] * c;
        return {a[0] + b[0] + 0.5 * (a[1] * wy - a[2] * wx), a[1] + wx, a[2] + wy,
                a[3] + b[3]};
    };
    g.inverse = [](const Point& p) -> Point {
        double c = std::cos(-p[3]), s = std::sin(-p[3]);
        return {-p[0], -(p[1] * c - p[2] * s), -(p[1] * s + p[2] * c), -p[3]};
    };
    g.frame = [](const Point& p) {
        double c = std::cos(p[3]), s = std::sin(p[3]);
        Eigen::MatrixXd f = Eigen::MatrixXd::Identity(4, 4);
        f(0, 1) = 0.5 * (p[1] * s - p[2] * c);
        f(1, 1) = c;
        f(2, 1) = s;
        f(0, 2) = 0.5 * (p[1] * c + p[2] * s);
        f(1, 2) = -s;
        f(2, 2) = c;
        return f;
    };
    g.sample = [](std::mt19937& rng) { return box_sample(rng, 4, -2.0, 2.0); };
    return g;
}

ChartedGroup euclidean_e2() {
    ChartedGroup g;
    g.name = "e2";
    g.dim = 3;
    g.algebra = StructureConstants(3, {"d", "e1", "e2"});
    g.algebra.set(0, 1, 2, 1);  // [d,e1] = e2
    g.algebra.set(0, 2, 1, -1); // [d,e2] = -e1
    g.identity = {0, 0, 0};
    g.in_chart = [](const Point& p) { return all_finite(p); };
    // (t,x,y): rotation by t then translation by (x,y); t unwrapped so the
    // chart covers the universal cover.
    g.product = [](const Point& a, const Point& b) -> Point {
        double c = std::cos(a[0]), s = std::sin(a[0]);
        return {a[0] + b[0], a[1] + b[1] * c - b[2] * s, a[2] + b[1] * s + b[2] * c};
    };
    g.inverse = [](const Point& p) -> Point {
        double c = std::cos(-p[0]), s = std::sin(-p[0]);
        return {-p[0], -(p[1] * c - p[2] * s), -(p[1] * s + p[2] * c)};
    };
    g.frame = [](const Point& p) {
        double c = std::cos(p[0]), s = std::sin(p[0]);
        Eigen::MatrixXd f = Eigen::MatrixXd::Identity(3, 3);
        f(1, 1) = c;
        f(2, 1) = s;
        f(1, 2) = -s;
        f(2, 2) = c;
        return f;
    };
    g.sample = [](std::mt19937& rng) { return box_sample(rng, 3, -2.0, 2.0); };
    return g;
}

ChartedGroup aff_r() {
    ChartedGroup g;
    g.name = "aff";
    g.dim = 2;
    g.algebra = StructureConstants(2, {"e1", "e2"});
    g.algebra.set(0, 1, 1, 1); // [e1,e2] = e2
    g.identity = {1, 0};
    g.in_chart = [](const Point& p) { return all_finite(p) && p[0] > 0; };
    g.product = [](const Point& a, const Point& b) -> Point {
        return {a[0] * b[0], a[0] * b[1] + a[1]};
    };
    g.inverse = [](const Point& p) -> Point { return {1 / p[0], -p[1] / p[0]}; };
    g.frame = [](const Point& p) {
        // e1+ = x d/dx, e2+ = x d/dy
        return (p[0] * Eigen::MatrixXd::Identity(2, 2)).eval();
    };
    g.sample = [](std::mt19937& rng) {
        std::uniform_real_distribution<double> dx(0.3, 3.0), dy(-2.0, 2.0);
        return Point{dx(rng), dy(rng)};
    };
    return g;
}

ChartedGroup dual_group(DualCase c, const std::array<Rational, 3>& alpha) {
    const Rational &a1 = alpha[0], &a2 = alpha[1], &a3 = alpha[2];
    switch (c) {
    case DualCase::abelian:
        if (a1 != 0 || a2 != 0 || a3 != 0)
            throw std::invalid_argument("abelian dual requires r = 0");
        break;
    case DualCase::heisenberg_x_line:
        if (a3 != 0 || (a1 != 0) == (a2 != 0))
            throw std::invalid_argument(
                "heisenberg_x_line dual requires a3 = 0 and exactly one of a1, a2 nonzero");
        break;
    case DualCase::central_ext:
        if (a3 != 0 || a1 == 0 || a2 == 0)
            throw std::invalid_argument("central_ext dual requires a3 = 0 and a1 a2 != 0");
        break;
    case DualCase::cplx_semidirect:
        if (a3 == 0) throw std::invalid_argument("cplx_semidirect dual requires a3 != 0");
        break;
    }

    ChartedGroup g;
    g.name = "dual";
    g.dim = 4;
    g.algebra = StructureConstants(4, {"e0*", "e1*", "e2*", "d*"});
    // [e0*, e1*] = a3 e2* - a2 d*, [e0*, e2*] = -a3 e1* + a1 d*
    g.algebra.set(0, 1, 2, a3);
    g.algebra.set(0, 1, 3, -a2);
    g.algebra.set(0, 2, 1, -a3);
    g.algebra.set(0, 2, 3, a1);
    g.identity = {0, 0, 0, 0};
    g.in_chart = [](const Point& p) { return all_finite(p); };

    const double d1 = to_double(a1), d2 = to_double(a2), d3 = to_double(a3);
    // exp(u A) on span(e1*, e2*, d*), A = ad_{e0*}: rotation by a3 u in the
    // (e1*, e2*) plane plus the induced shear into d*.
    auto exp_uA = [d1, d2, d3](double u) {
        Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
        double c = std::cos(d3 * u), s = std::sin(d3 * u);
        if (d3 != 0.0) {
            m(0, 0) = c;
            m(0, 1) = -s;
            m(1, 0) = s;
            m(1, 1) = c;
            m(2, 0) = (-d2 * s + d1 * (1 - c)) / d3;
            m(2, 1) = (d2 * (1 - c) + d1 * s) / d3;
        } else {
            m(2, 0) = -d2 * u;
            m(2, 1) = d1 * u;
        }
        return m;
    };
    g.product = [exp_uA](const Point& a, const Point& b) -> Point {
        Eigen::Matrix3d m = exp_uA(a[0]);
        Eigen::Vector3d v(b[1], b[2], b[3]);
        Eigen::Vector3d w = m * v;
        return {a[0] + b[0], a[1] + w(0), a[2] + w(1), a[3] + w(2)};
    };
    g.inverse = [exp_uA](const Point& p) -> Point {
        Eigen::Matrix3d m = exp_uA(-p[0]);
        Eigen::Vector3d v(p[1], p[2], p[3]);
        Eigen::Vector3d w = -(m * v);
        return {-p[0], w(0), w(1), w(2)};
    };
    g.frame = [exp_uA](const Point& p) {
        Eigen::MatrixXd f = Eigen::MatrixXd::Identity(4, 4);
        f.block<3, 3>(1, 1) = exp_uA(p[0]);
        return f;
    };
    g.sample = [](std::mt19937& rng) { return box_sample(rng, 4, -2.0, 2.0); };
    return g;
}

ChartedGroup central_ext_chart() {
    ChartedGroup g;
    g.name = "dual-central-ext-chart";
    g.dim = 4;
    // chart (x,y,z,w) = (d*, e0*, e2*, e1*) coordinates of dual_group(.,(1,1,0))
    g.algebra = StructureConstants(4, {"d*", "e0*", "e2*", "e1*"});
    g.algebra.set(1, 2, 0, 1);  // [e0*, e2*] = d*
    g.algebra.set(1, 3, 0, -1); // [e0*, e1*] = -d*
    g.identity = {0, 0, 0, 0};
    g.in_chart = [](const Point& p) { return all_finite(p); };
    g.product = [](const Point& a, const Point& b) -> Point {
        return {a[0] + b[0] + (a[3] - a[2]) * b[1] + a[3] * b[2] + a[2] * b[3],
                a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    };
    g.inverse = [](const Point& p) -> Point {
        return {-p[0] + (p[3] - p[2]) * p[1] + 2 * p[3] * p[2], -p[1], -p[2], -p[3]};
    };
    g.frame = [](const Point& p) {
        Eigen::MatrixXd f = Eigen::MatrixXd::Identity(4, 4);
        f(0, 1) = p[3] - p[2];
        f(0, 2) = p[3];
        f(0, 3) = p[2];
        return f;
    };
    g.sample = [](std::mt19937& rng) { return box_sample(rng, 4, -2.0, 2.0); };
    return g;
}

ChartedGroup cplx_semidirect_chart(const Rational& a3) {
    if (a3 == 0) throw std::invalid_argument("cplx_semidirect chart requires a3 != 0");
    ChartedGroup g;
    g.name = "dual-cplx-chart";
    g.dim = 4;
    // chart (z1, z2, s, t) = (e1*, e2*, e0*, d*) coordinates of dual_group(.,(0,0,a3))
    g.algebra = StructureConstants(4, {"e1*", "e2*", "e0*", "d*"});
    g.algebra.set(2, 0, 1, a3);  // [e0*, e1*] = a3 e2*
    g.algebra.set(2, 1, 0, -a3); // [e0*, e2*] = -a3 e1*
    g.identity = {0, 0, 0, 0};
    g.in_chart = [](const Point& p) { return all_finite(p); };
    const double d3 = to_double(a3);
    g.product = [d3](const Point& a, const Point& b) -> Point {
        double c = std::cos(d3 * a[2]), s = std::sin(d3 * a[2]);
        return {a[0] + b[0] * c - b[1] * s, a[1] + b[0] * s + b[1] * c, a[2] + b[2],
                a[3] + b[3]};
    };
    g.inverse = [d3](const Point& p) -> Point {
        double c = std::cos(-d3 * p[2]), s = std::sin(-d3 * p[2]);
        return {-(p[0] * c - p[1] * s), -(p[0] * s + p[1] * c), -p[2], -p[3]};
    };
    g.frame = [d3](const Point& p) {
        double c = std::cos(d3 * p[2]), s = std::sin(d3 * p[2]);
        Eigen::MatrixXd f = Eigen::MatrixXd::Identity(4, 4);
        f(0, 0) = c;
        f(1, 0) = s;
        f(0, 1) = -s;
        f(1, 1) = c;
        return f;
    };
    g.sample = [](std::mt19937& rng) { return box_sample(rng, 4, -2.0, 2.0); };
    return g;
}

GroupHom oscillator_projection() {
    GroupHom h;
    h.source = oscillator();
    h.target = euclidean_e2();
    h.map.name = "pi";
    h.map.inputs = {"x1", "x2", "x3", "x4"};
    h.map.outputs = {Expr::parse("x4"), Expr::parse("x2"), Expr::parse("x3")};
    return h;
}

CoordinateMap e2_section() {
    CoordinateMap s;
    s.name = "section";
    s.inputs = {"t", "x", "y"};
    s.outputs = {Expr::parse("0"), Expr::parse("x"), Expr::parse("y"), Expr::parse("t")};
    return s;
}

double associativity_residual(const ChartedGroup& g, const Point& a, const Point& b,
                              const Point& c) {
    return inf_norm(g.product(g.product(a, b), c), g.product(a, g.product(b, c)));
}

double identity_residual(const ChartedGroup& g, const Point& p) {
    return std::max(inf_norm(g.product(g.identity, p), p),
                    inf_norm(g.product(p, g.identity), p));
}

double inverse_residual(const ChartedGroup& g, const Point& p) {
    auto q = g.inverse(p);
    return std::max(inf_norm(g.product(p, q), g.identity),
                    inf_norm(g.product(q, p), g.identity));
}

double left_invariance_residual(const ChartedGroup& g, const Point& a, const Point& x) {
    auto J = numeric_jacobian_fn([&](const Point& q) { return g.product(a, q); }, x, g.dim);
    Eigen::MatrixXd Jm(g.dim, g.dim);
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) Jm(i, j) = J[i][j];
    Eigen::MatrixXd lhs = g.frame(g.product(a, x));
    Eigen::MatrixXd rhs = Jm * g.frame(x);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

double hom_residual(const GroupHom& h, const Point& a, const Point& b) {
    auto lhs = h.map(h.source.product(a, b));
    auto rhs = h.target.product(h.map(a), h.map(b));
    return inf_norm(lhs, rhs);
}

Eigen::MatrixXd frame_bracket(const ChartedGroup& g, const Point& p, std::size_t i,
                              std::size_t j) {
    const std::size_t n = g.dim;
    auto field = [&](std::size_t col) {
        return [&g, col](const Point& q) {
            Eigen::VectorXd v = g.frame(q).col(col);
            return Point(v.data(), v.data() + v.size());
        };
    };
    auto Ji = numeric_jacobian_fn(field(i), p, n);
    auto Jj = numeric_jacobian_fn(field(j), p, n);
    Eigen::VectorXd vi = g.frame(p).col(i), vj = g.frame(p).col(j);
    Eigen::VectorXd br(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0;
        for (std::size_t m = 0; m < n; ++m) s += Jj[k][m] * vi(m) - Ji[k][m] * vj(m);
        br(k) = s;
    }
    return br;
}

double frame_structure_residual(const ChartedGroup& g, const Point& p) {
    const std::size_t n = g.dim;
    Eigen::MatrixXd fr = g.frame(p);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(fr);
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Eigen::VectorXd cnum = lu.solve(frame_bracket(g, p, i, j));
            for (std::size_t k = 0; k < n; ++k)
                worst = std::max(worst, std::abs(cnum(k) - to_double(g.algebra.c(i, j, k))));
        }
    return worst;
}

bool lambda_independence_check(double lambda, double lambda_prime, double tol) {
    double mu = lambda_prime / lambda;
    return lambda_independence_check(
        lambda, lambda_prime,
        [mu](const Point& p) -> Point { return {p[0], std::pow(p[1], mu), mu * p[2]}; },
        tol);
}

bool lambda_independence_check(double lambda, double lambda_prime,
                               const std::function<Point(const Point&)>& intertwiner,
                               double tol) {
    if (lambda <= 0 || lambda_prime <= 0)
        throw std::invalid_argument("oscillator parameters must be positive");
    // Points of H3 in polar coordinates (s, r, theta), theta on the principal
    // branch; rho(t) rotates z, i.e. shifts theta by lambda t.
    auto rho = [](double l, double t, const Point& p) -> Point {
        return {p[0], p[1], p[2] + l * t};
    };
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> ds(-2, 2), dr(0.1, 3.0), dth(-3.1, 3.1),
        dt(-2, 2);
    for (int it = 0; it < 200; ++it) {
        Point p{ds(rng), dr(rng), dth(rng)};
        double t = dt(rng);
        Point lhs = intertwiner(rho(lambda, t, p));
        Point rhs = rho(lambda_prime, t, intertwiner(p));
        if (inf_norm(lhs, rhs) > tol) return false;
    }
    // the fixed sample from the contract: t = pi/2 distinguishes the routes
    Point p{0.5, 1.5, 0.3};
    double t = 1.5707963267948966;
    if (inf_norm(intertwiner(rho(lambda, t, p)), rho(lambda_prime, t, intertwiner(p))) > tol)
        return false;
    return true;
}

} // namespace flataffine
