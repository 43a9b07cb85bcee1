#include "flataffine/developing.hpp"

#include "flataffine/expr.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace flataffine {

namespace {

using Deriv = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

void rk4_segment(const Deriv& f, Eigen::VectorXd& y, std::size_t steps) {
    const double h = 1.0 / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        const double t = h * static_cast<double>(s);
        const Eigen::VectorXd k1 = f(t, y);
        const Eigen::VectorXd k2 = f(t + h / 2, y + (h / 2) * k1);
        const Eigen::VectorXd k3 = f(t + h / 2, y + (h / 2) * k2);
        const Eigen::VectorXd k4 = f(t + h, y + h * k3);
        y += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

// C(u) = sum_i u^i slices[i], with slices[i](k, j) = p^k_{ij}.
std::vector<Eigen::MatrixXd> connection_slices(const ProductTable& P) {
    const int n = static_cast<int>(P.dim());
    std::vector<Eigen::MatrixXd> slices(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                slices[static_cast<std::size_t>(i)](k, j) =
                    to_double(P.p(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                  static_cast<std::size_t>(k)));
    return slices;
}

void validate_waypoints(const FlatAffineGroup& fa, const std::vector<Point>& wps) {
    if (wps.size() < 2) throw std::invalid_argument("path needs at least two waypoints");
    for (const Point& w : wps) {
        if (w.size() != fa.group.dim) throw std::invalid_argument("waypoint dimension mismatch");
        if (!fa.group.in_chart(w))
            throw std::domain_error("waypoint outside the chart of " + fa.group.name);
    }
}

struct RunOutput {
    Eigen::VectorXd state;          // [W (n*n, column-major) | D (n)]
    std::vector<Point> checkpoints; // D at every waypoint
};

RunOutput run_development(const FlatAffineGroup& fa, const std::vector<Point>& wps,
                          const std::vector<Eigen::MatrixXd>& slices,
                          std::size_t steps_per_segment) {
    const int n = static_cast<int>(fa.group.dim);
    RunOutput out;
    out.state = Eigen::VectorXd::Zero(n * n + n);
    Eigen::Map<Eigen::MatrixXd>(out.state.data(), n, n).setIdentity();
    out.checkpoints.push_back(Point(static_cast<std::size_t>(n), 0.0));

    for (std::size_t seg = 0; seg + 1 < wps.size(); ++seg) {
        const Point& a = wps[seg];
        const Point& b = wps[seg + 1];
        Eigen::VectorXd da(n);
        for (int i = 0; i < n; ++i)
            da(i) = b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];

        Deriv f = [&](double t, const Eigen::VectorXd& y) -> Eigen::VectorXd {
            Point g(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                g[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + t * da(i);
            if (!fa.group.in_chart(g))
                throw std::domain_error("development path leaves the chart of " + fa.group.name);
            const Eigen::VectorXd u = fa.group.frame(g).partialPivLu().solve(da);
            Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) C += u(i) * slices[static_cast<std::size_t>(i)];
            const Eigen::Map<const Eigen::MatrixXd> W(y.data(), n, n);
            Eigen::VectorXd dy(n * n + n);
            Eigen::Map<Eigen::MatrixXd>(dy.data(), n, n) = W * C;
            dy.tail(n) = W * u;
            return dy;
        };
        rk4_segment(f, out.state, steps_per_segment);

        Point d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = out.state(n * n + i);
        out.checkpoints.push_back(std::move(d));
    }
    return out;
}

Eigen::VectorXd run_transport(const FlatAffineGroup& fa, const std::vector<Point>& wps,
                              const std::vector<Eigen::MatrixXd>& slices, const Point& v,
                              std::size_t steps_per_segment) {
    const int n = static_cast<int>(fa.group.dim);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = v[static_cast<std::size_t>(i)];

    for (std::size_t seg = 0; seg + 1 < wps.size(); ++seg) {
        const Point& a = wps[seg];
        const Point& b = wps[seg + 1];
        Eigen::VectorXd da(n);
        for (int i = 0; i < n; ++i)
            da(i) = b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];

        Deriv f = [&](double t, const Eigen::VectorXd& y) -> Eigen::VectorXd {
            Point g(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                g[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + t * da(i);
            if (!fa.group.in_chart(g))
                throw std::domain_error("transport path leaves the chart of " + fa.group.name);
            const Eigen::VectorXd u = fa.group.frame(g).partialPivLu().solve(da);
            Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) C += u(i) * slices[static_cast<std::size_t>(i)];
            return -C * y;
        };
        rk4_segment(f, x, steps_per_segment);
    }
    return x;
}

double param(const std::map<std::string, double>& ps, const std::string& key) {
    const auto it = ps.find(key);
    if (it == ps.end()) throw std::invalid_argument("missing parameter \"" + key + "\"");
    return it->second;
}

double inf_norm(const Point& v) {
    double m = 0;
    for (double c : v) m = std::max(m, std::abs(c));
    return m;
}

} // namespace

FlatAffineGroup make_flat_affine(ChartedGroup g, ProductTable connection) {
    if (connection.dim() != g.dim)
        throw std::invalid_argument("connection dimension does not match the group");
    if (!is_compatible(connection, g.algebra).ok)
        throw std::invalid_argument("connection is not torsion-free for the group bracket");
    if (!operator_relations_check(connection, g.algebra).ok)
        throw std::invalid_argument("connection is not flat for the group bracket");
    return FlatAffineGroup{std::move(g), std::move(connection)};
}

PathSpec PathSpec::segment(Point from, Point to) {
    return PathSpec{{std::move(from), std::move(to)}};
}

PathSpec PathSpec::through(std::vector<Point> pts) { return PathSpec{std::move(pts)}; }

TransportResult integrate_development(const FlatAffineGroup& fa, const PathSpec& path,
                                      const DevelopOptions& opts) {
    validate_waypoints(fa, path.waypoints);
    const int n = static_cast<int>(fa.group.dim);
    const std::vector<Eigen::MatrixXd> slices = connection_slices(fa.connection);

    std::size_t steps = std::max<std::size_t>(opts.base_steps, 1);
    RunOutput coarse = run_development(fa, path.waypoints, slices, steps);
    for (std::size_t round = 0;; ++round) {
        RunOutput fine = run_development(fa, path.waypoints, slices, 2 * steps);
        const double err = (fine.state - coarse.state).lpNorm<Eigen::Infinity>() / 15.0;
        if (err < opts.tol || round >= opts.max_doublings) {
            TransportResult res;
            res.coframe = Eigen::Map<const Eigen::MatrixXd>(fine.state.data(), n, n);
            res.development.assign(static_cast<std::size_t>(n), 0.0);
            for (int i = 0; i < n; ++i)
                res.development[static_cast<std::size_t>(i)] = fine.state(n * n + i);
            res.checkpoints = std::move(fine.checkpoints);
            res.error = err;
            res.steps = 2 * steps * (path.waypoints.size() - 1);
            return res;
        }
        coarse = std::move(fine);
        steps *= 2;
    }
}

Point parallel_transport(const FlatAffineGroup& fa, const PathSpec& path, const Point& v,
                         const DevelopOptions& opts) {
    validate_waypoints(fa, path.waypoints);
    if (v.size() != fa.group.dim) throw std::invalid_argument("vector dimension mismatch");
    const int n = static_cast<int>(fa.group.dim);
    const std::vector<Eigen::MatrixXd> slices = connection_slices(fa.connection);

    std::size_t steps = std::max<std::size_t>(opts.base_steps, 1);
    Eigen::VectorXd coarse = run_transport(fa, path.waypoints, slices, v, steps);
    for (std::size_t round = 0;; ++round) {
        const Eigen::VectorXd fine = run_transport(fa, path.waypoints, slices, v, 2 * steps);
        const double err = (fine - coarse).lpNorm<Eigen::Infinity>() / 15.0;
        if (err < opts.tol || round >= opts.max_doublings) {
            Point out(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fine(i);
            return out;
        }
        coarse = fine;
        steps *= 2;
    }
}

DevelopmentResult develop(const FlatAffineGroup& fa, const Point& x, const DevelopOptions& opts) {
    const TransportResult tr =
        integrate_development(fa, PathSpec::segment(fa.group.identity, x), opts);
    return DevelopmentResult{tr.development, tr.error, tr.steps};
}

Point closed_form_development(DevelopingFamily fam, const std::map<std::string, double>& params,
                              const Point& x) {
    const bool planar = fam == DevelopingFamily::aff1 || fam == DevelopingFamily::aff2;
    if (planar && x.size() != 2) throw std::invalid_argument("planar families take 2 coordinates");
    if (!planar && x.size() != 4)
        throw std::invalid_argument("oscillator families take 4 coordinates");

    if (planar) {
        const double a = param(params, "alpha");
        const double X = x[0];
        const double Y = x[1];
        if (X <= 0) throw std::domain_error("closed forms require x > 0");
        if (a == 0.0) return {std::log(X), Y};
        if (fam == DevelopingFamily::aff1) {
            if (a == 1.0) return {X - 1, Y + 1 + X * (std::log(X) - 1)};
            const double Xa = std::pow(X, a);
            return {(Xa - 1) / a, Y + (Xa - a * X) / (a - 1) + 1};
        }
        if (a == -1.0) return {1 - 1 / X, (1 + Y) / X - 1 + std::log(X)};
        const double Xa = std::pow(X, a);
        return {(Xa - 1) / a, Xa * (Y + 1) - (a * Xa * X + 1) / (a + 1)};
    }

    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    const double r2 = x2 * x2 + x3 * x3;
    switch (fam) {
    case DevelopingFamily::osc1: {
        const double t = param(params, "t");
        const double s = param(params, "s");
        return {x1 + t / 2 * r2 + s / 2 * x4 * x4, x2, x3, x4};
    }
    case DevelopingFamily::osc2: {
        const double a = param(params, "alpha");
        const double t = param(params, "t");
        if (a == 0.0) throw std::domain_error("second-family closed form needs a nonzero alpha");
        return {x1 + t / 2 * r2, x2, x3, (std::exp(a * x4) - 1) / a};
    }
    case DevelopingFamily::osc3:
        return {x1, x2, x3, x4 + r2 / 2};
    case DevelopingFamily::osc4: {
        if (std::abs(x4) < 1e-12)
            throw std::domain_error("fourth-family closed form is singular at x4 = 0");
        const double c = std::cos(x4);
        const double s = std::sin(x4);
        const double f1 = x1 - (x2 + 5 * x4 + 2) / 4 - (2 * x3 * x4 + x3) / (4 * x4) +
                          s / (4 * x4 * x4) *
                              (2 * x2 * x2 + 2 * x2 * x4 * (x4 + 2) + 2 * x3 * x3 -
                               x3 * (x4 - 6) * x4 + 3 * x4 * x4) -
                          c / (4 * x4) *
                              (2 * x2 * x2 + 2 * x2 * x4 + (2 * x3 - 1) * (x3 + 2 * x4));
        const double f2 = -x4 / 2 + r2 / (2 * x4 * x4) * (c - 1) +
                          (4 * x2 - 2 * x3 + 2 * (x2 + 2 * x3 + 2) * s +
                           (4 * x2 - 4 * x3 + 3) * c - 3) /
                              8 +
                          ((2 * x2 * x2 + x3 * (2 * x3 + 3)) * s + 4 * x3 * (c - 1)) / (4 * x4);
        const double f3 = (r2 / (4 * x4 * x4) + (4 * x2 - 2 * x3 - 7) / 4 - x2 / x4) * c +
                          (2 * x2 * x2 + x2 * (x4 - 4) + 2 * (x3 * (x3 + x4 + 2) + x4)) * s /
                              (2 * x4) -
                          r2 / (x4 * x4) + (7 - 2 * x3) / 4 + x2 / x4 + x2 - x4;
        const double f4 = ((2 * x3 + 5) / 4 - r2 / (x4 * x4) - x2) * c -
                          (r2 / x4 - (2 * x2 - x3) / x4 + x2 / 2 + x3) * s + r2 / (x4 * x4) +
                          (2 * x3 - 5) / 4 + x4 - x2;
        return {f1, f2, f3, f4};
    }
    default:
        throw std::invalid_argument("unknown developing family");
    }
}

GeodesicResult geodesic(const FlatAffineGroup& fa, const Point& start, const Point& v0, double T,
                        std::size_t steps) {
    const std::size_t n = fa.group.dim;
    if (start.size() != n || v0.size() != n)
        throw std::invalid_argument("geodesic data dimension mismatch");
    if (steps == 0) throw std::invalid_argument("geodesic needs at least one step");
    if (!fa.group.in_chart(start))
        throw std::domain_error("geodesic start outside the chart of " + fa.group.name);

    const int ni = static_cast<int>(n);
    const std::vector<Eigen::MatrixXd> slices = connection_slices(fa.connection);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    Deriv f = [&](double, const Eigen::VectorXd& y) -> Eigen::VectorXd {
        Point g(n);
        for (int i = 0; i < ni; ++i) g[static_cast<std::size_t>(i)] = y(i);
        Eigen::VectorXd dy(2 * ni);
        if (!y.allFinite() || !fa.group.in_chart(g)) {
            dy.setConstant(nan);
            return dy;
        }
        const Eigen::VectorXd u = y.tail(ni);
        Eigen::MatrixXd C = Eigen::MatrixXd::Zero(ni, ni);
        for (int i = 0; i < ni; ++i) C += u(i) * slices[static_cast<std::size_t>(i)];
        dy.head(ni) = fa.group.frame(g) * u;
        dy.tail(ni) = -C * u;
        return dy;
    };

    Eigen::VectorXd y(2 * ni);
    for (int i = 0; i < ni; ++i) {
        y(i) = start[static_cast<std::size_t>(i)];
        y(ni + i) = v0[static_cast<std::size_t>(i)];
    }

    GeodesicResult res;
    auto record = [&](double t) {
        Point p(n), u(n);
        for (int i = 0; i < ni; ++i) {
            p[static_cast<std::size_t>(i)] = y(i);
            u[static_cast<std::size_t>(i)] = y(ni + i);
        }
        res.times.push_back(t);
        res.points.push_back(std::move(p));
        res.velocities.push_back(std::move(u));
    };
    record(0.0);

    const double h = T / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        const double t = h * static_cast<double>(s);
        Eigen::VectorXd trial = y;
        const Deriv scaled = [&](double tau, const Eigen::VectorXd& z) { return (f(tau, z) * h).eval(); };
        rk4_segment(scaled, trial, 1);

        Point p(n);
        for (int i = 0; i < ni; ++i) p[static_cast<std::size_t>(i)] = trial(i);
        const bool bad = !trial.allFinite() || !fa.group.in_chart(p) ||
                         trial.head(ni).lpNorm<Eigen::Infinity>() > 1e6 ||
                         trial.tail(ni).lpNorm<Eigen::Infinity>() > 1e9;
        if (bad) {
            res.exited = true;
            res.exit_time = t;
            return res;
        }
        y = trial;
        record(t + h);
    }
    return res;
}

double collinearity_residual(const std::vector<Point>& pts) {
    if (pts.size() < 3) return 0.0;
    const int m = static_cast<int>(pts.size());
    const int n = static_cast<int>(pts[0].size());
    Eigen::MatrixXd M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    double length = 0;
    for (int i = 0; i + 1 < m; ++i) length += (M.row(i + 1) - M.row(i)).norm();
    if (length < 1e-14) return 0.0;

    const Eigen::RowVectorXd centroid = M.colwise().mean();
    M.rowwise() -= centroid;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    const Eigen::VectorXd dir = svd.matrixV().col(0);

    double maxd = 0;
    for (int i = 0; i < m; ++i) {
        const Eigen::VectorXd r = M.row(i).transpose();
        maxd = std::max(maxd, (r - r.dot(dir) * dir).norm());
    }
    return maxd / length;
}

AffineRep affine_rep(const FlatAffineGroup& fa, const CoordinateMap& F,
                     const DevelopOptions& opts) {
    const int n = static_cast<int>(fa.group.dim);
    const Point p = fa.group.identity;
    const Point Fp = F(p);
    if (Fp.size() != fa.group.dim || !fa.group.in_chart(Fp))
        throw std::domain_error("map sends the identity outside the chart");

    const TransportResult tr = integrate_development(fa, PathSpec::segment(p, Fp), opts);
    const auto JF = numeric_jacobian(F, p);
    Eigen::MatrixXd J(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            J(i, j) = JF[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    AffineRep rep;
    rep.Q = tr.development;
    rep.L = tr.coframe * fa.group.frame(Fp).partialPivLu().solve(J);
    return rep;
}

double affine_diagram_residual(const FlatAffineGroup& fa, const CoordinateMap& F,
                               const AffineRep& rep, const std::vector<Point>& samples,
                               const DevelopOptions& opts) {
    const int n = static_cast<int>(fa.group.dim);
    Eigen::VectorXd Q(n);
    for (int i = 0; i < n; ++i) Q(i) = rep.Q[static_cast<std::size_t>(i)];

    double worst = 0;
    for (const Point& x : samples) {
        const Point lhs_pt = develop(fa, F(x), opts).value;
        const Point dx = develop(fa, x, opts).value;
        Eigen::VectorXd d(n), lhs(n);
        for (int i = 0; i < n; ++i) {
            d(i) = dx[static_cast<std::size_t>(i)];
            lhs(i) = lhs_pt[static_cast<std::size_t>(i)];
        }
        worst = std::max(worst, (lhs - (Q + rep.L * d)).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

bool affine_map_check(const CoordinateMap& f, const ProductTable& P, const ChartedGroup& group,
                      const std::vector<Point>& starts, double tol) {
    const FlatAffineGroup fa = make_flat_affine(group, P);
    const std::size_t n = group.dim;
    std::mt19937 rng(20240517u);
    std::uniform_real_distribution<double> dir(-1.0, 1.0);

    for (const Point& start : starts) {
        for (int rep = 0; rep < 2; ++rep) {
            Point v0(n);
            double nrm = 0;
            while (nrm < 0.1) {
                for (double& c : v0) c = dir(rng);
                nrm = inf_norm(v0);
            }
            for (double& c : v0) c /= nrm;

            double T = 0.4;
            GeodesicResult geo;
            bool usable = false;
            for (int attempt = 0; attempt < 6 && !usable; ++attempt) {
                geo = geodesic(fa, start, v0, T, 64);
                if (geo.exited)
                    T /= 2;
                else
                    usable = true;
            }
            if (!usable) return false;

            std::vector<Point> mapped;
            for (std::size_t i = 0; i < geo.points.size(); i += 8) {
                Point fq = f(geo.points[i]);
                if (fq.size() != n || !group.in_chart(fq)) return false;
                mapped.push_back(std::move(fq));
            }

            const TransportResult tr = integrate_development(fa, PathSpec::through(mapped), {});
            const auto& cps = tr.checkpoints;
            Point first_inc;
            double scale = 0, dev = 0;
            for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
                Point inc(n);
                for (std::size_t j = 0; j < n; ++j) inc[j] = cps[i + 1][j] - cps[i][j];
                if (i == 0) {
                    first_inc = inc;
                    scale = std::max(inf_norm(inc), 1e-12);
                } else {
                    for (std::size_t j = 0; j < n; ++j)
                        dev = std::max(dev, std::abs(inc[j] - first_inc[j]));
                }
            }
            if (dev / scale > tol) return false;
        }
    }
    return true;
}

} // namespace flataffine
