#include "flataffine/reproduction.hpp"

#include "flataffine/algebra.hpp"
#include "flataffine/algfile.hpp"
#include "flataffine/catalog.hpp"
#include "flataffine/cohomology.hpp"
#include "flataffine/developing.hpp"
#include "flataffine/groups.hpp"
#include "flataffine/symplectic.hpp"
#include "flataffine/yang_baxter.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace flataffine {

namespace {

const std::vector<Rational> kAlphaSamples = {Rational(-1), Rational(1, 2), Rational(2)};
const std::vector<Rational> kTSSamples = {Rational(0), Rational(1), Rational(3, 2)};

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double linf(const Point& a, const Point& b)
{
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Collects failures; caps the recorded notes so one broken table does not
/// flood the report.
struct Checker {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (ok)
            return;
        pass = false;
        if (fails_ < 8)
            notes.push_back("FAIL " + what);
        else if (fails_ == 8)
            notes.push_back("(further failures suppressed)");
        ++fails_;
    }

    void note(const std::string& n) { notes.push_back(n); }

private:
    std::size_t fails_ = 0;
};

// ---------------------------------------------------------------- criteria

void crit1(Checker& c)
{
    auto verify = [&](const std::string& label, const ProductTable& P,
                      const StructureConstants& L) {
        c.require(is_left_symmetric(P).ok, label + " left symmetry");
        c.require(is_compatible(P, L).ok, label + " compatibility");
        c.require(is_torsion_free(P, L), label + " torsion-free");
        c.require(is_flat(P, L), label + " flat");
    };
    const auto e2 = catalog::euclidean2();
    for (const auto& a : kAlphaSamples) {
        verify("e2 F1(" + to_string(a) + ")", catalog::e2_F1(a), e2);
        verify("e2 F2(" + to_string(a) + ")", catalog::e2_F2(a), e2);
    }
    verify("e2 F1(0)", catalog::e2_F1(0), e2);
    verify("e2 F3", catalog::e2_F3(), e2);
    verify("e2 F4", catalog::e2_F4(), e2);

    const auto osc = catalog::oscillator();
    for (const auto& t : kTSSamples)
        for (const auto& s : kTSSamples)
            verify("osc F1(" + to_string(t) + "," + to_string(s) + ")",
                   catalog::osc_F1(t, s), osc);
    for (const auto& a : kAlphaSamples)
        for (const auto& t : kTSSamples)
            verify("osc F2(" + to_string(a) + "," + to_string(t) + ")",
                   catalog::osc_F2(a, t), osc);
    verify("osc F3", catalog::osc_F3(), osc);
    verify("osc F4", catalog::osc_F4(), osc);
}

void crit2(Checker& c)
{
    auto h2 = [](const ProductTable& P) { return cohomology(P).dim_h2; };
    c.require(h2(catalog::e2_F1(0)) == 3, "dim H2 of e2 F1(0) is 3");
    for (const auto& a : kAlphaSamples)
        c.require(h2(catalog::e2_F1(a)) == 0,
                  "dim H2 of e2 F1(" + to_string(a) + ") is 0");
    for (const auto& a : kAlphaSamples)
        c.require(h2(catalog::e2_F2(a)) == 2,
                  "dim H2 of e2 F2(" + to_string(a) + ") is 2");
    c.require(h2(catalog::e2_F3()) == 1, "dim H2 of e2 F3 is 1");
    c.require(h2(catalog::e2_F4()) == 1, "dim H2 of e2 F4 is 1");
}

void crit3(Checker& c)
{
    for (const auto& t : kTSSamples)
        for (const auto& s : kTSSamples)
            c.require(completeness_trace_check(catalog::osc_F1(t, s)),
                      "osc F1(" + to_string(t) + "," + to_string(s) + ") complete");
    c.require(completeness_trace_check(catalog::osc_F3()), "osc F3 complete");
    c.require(completeness_trace_check(catalog::osc_F4()), "osc F4 complete");
    for (const auto& a : kAlphaSamples)
        for (const auto& t : kTSSamples)
            c.require(!completeness_trace_check(catalog::osc_F2(a, t)),
                      "osc F2(" + to_string(a) + "," + to_string(t) +
                          ") incomplete");
}

void crit4(Checker& c)
{
    const std::vector<Rational> grid = {Rational(-1), Rational(0), Rational(2)};
    for (const auto& a1 : grid)
        for (const auto& a2 : grid)
            for (const auto& a3 : grid) {
                const std::array<Rational, 3> al{a1, a2, a3};
                const std::string tag = "r(" + to_string(a1) + "," + to_string(a2) +
                                        "," + to_string(a3) + ")";
                auto rv = catalog::oscillator_r(al);
                auto rep = cybe_check(rv);
                c.require(rep.ok, tag + " satisfies the CYBE");
                if (!rep.ok)
                    continue;
                auto pack = dual_structures(rv);
                c.require(pack.bracket == catalog::dual_oscillator(al),
                          tag + " dual bracket table");
                c.require(pack.product == catalog::dual_oscillator_product(al),
                          tag + " dual product table");
                auto dbl = double_algebra(rv);
                c.require(check_jacobi(dbl.bracket).ok, tag + " double Jacobi");
                c.require(is_ad_invariant(dbl.pairing, dbl.bracket),
                          tag + " pairing ad-invariant");
                c.require(dbl.pairing.m.signature() == std::make_pair(4, 4),
                          tag + " pairing signature (4,4)");
                bool isotropic = true;
                for (std::size_t i = 0; i < 4 && isotropic; ++i)
                    for (std::size_t j = 0; j < 4 && isotropic; ++j)
                        if (dbl.pairing.m(i, j) != 0 ||
                            dbl.pairing.m(4 + i, 4 + j) != 0)
                            isotropic = false;
                c.require(isotropic, tag + " factors isotropic");
            }
}

void crit5(Checker& c)
{
    const std::vector<std::array<Rational, 3>> samples = {
        {Rational(1), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1)},
        {Rational(2), Rational(-1), Rational(3)},
        {Rational(-1), Rational(1, 2), Rational(2)},
        {Rational(0), Rational(0), Rational(0)},
    };
    bool erratum_noted = false;
    for (const auto& al : samples) {
        const std::string tag = "o*(" + to_string(al[0]) + "," + to_string(al[1]) +
                                "," + to_string(al[2]) + ")";
        auto L = catalog::dual_oscillator(al);
        SymplecticForm w(catalog::dual_omega().m);
        c.require(symplectic_check(w, L).ok(), tag + " omega symplectic");
        auto sp = product_from_symplectic(w, L);

        auto row = [&](std::size_t i, std::size_t j) {
            std::vector<Rational> v(4);
            for (std::size_t k = 0; k < 4; ++k)
                v[k] = sp.p(i, j, k);
            return v;
        };
        using V = std::vector<Rational>;
        c.require(row(0, 2) == V{0, -al[2], 0, 0}, tag + " display e0*e2*");
        c.require(row(1, 1) == V{0, 0, 0, -al[2]}, tag + " display e1*e1*");
        c.require(row(2, 2) == V{0, 0, 0, -al[2]}, tag + " display e2*e2*");
        c.require(row(0, 1) == V{0, 0, al[2], 0}, tag + " display e0*e1*");

        const V printed_fifth{-al[0], 0, -al[1], 0}; // -a1 e0* - a2 e2*
        const V derived_fifth = row(0, 0);
        if (derived_fifth != printed_fifth) {
            // the defining identity w(v, z) = -w(e0*, [e0*, z]) arbitrates
            auto satisfies = [&](const V& v) {
                std::vector<Rational> e0(4);
                e0[0] = 1;
                for (std::size_t z = 0; z < 4; ++z) {
                    std::vector<Rational> ez(4);
                    ez[z] = 1;
                    if (w.form.eval(v, ez) != -w.form.eval(e0, L.bracket(e0, ez)))
                        return false;
                }
                return true;
            };
            c.require(!satisfies(printed_fifth),
                      tag + " printed e0*e0* fails the defining identity");
            c.require(satisfies(derived_fifth),
                      tag + " derived e0*e0* satisfies the defining identity");
            if (!erratum_noted) {
                c.note("erratum: the reference list of nonzero products of the dual "
                       "symplectic structure prints e0*e0* = -a2 e2* - a1 e0*, which "
                       "fails the defining identity w(xy,z) = -w(y,[x,z]) whenever "
                       "a1 != 0; the identity forces e0*e0* = -a1 e1* - a2 e2*, and "
                       "the nonzero entries e1*e0* = a2 d* and e2*e0* = -a1 d* are "
                       "missing from that list");
                erratum_noted = true;
            }
        }

        c.require(is_left_symmetric(sp).ok, tag + " product left-symmetric");
        c.require(is_compatible(sp, L).ok, tag + " product compatible");
        c.require(completeness_trace_check(sp), tag + " product complete");
        if (al[2] != 0)
            c.require(!(sp == dual_product(catalog::oscillator_r(al))),
                      tag + " differs from the dual product");
    }
}

void crit6(Checker& c)
{
    auto L = catalog::aff_r();
    SymplecticForm w(catalog::aff_omega().m);
    c.require(symplectic_check(w, L).ok(), "omega+ symplectic on aff(R)");
    c.require(product_from_symplectic(w, L) == catalog::aff_odot(),
              "symplectic product table");
    LagrangianSplit split{{0}, {1}};
    bool split_ok = true;
    try {
        validate_split(split, w, L);
    } catch (const std::exception&) {
        split_ok = false;
    }
    c.require(split_ok, "coordinate split is Lagrangian");
    auto hess = hess_connection(w, L, split);
    c.require(hess == catalog::aff_iso1(), "Hess connection table");
    c.require(is_flat(hess, L), "Hess connection flat");
    c.require(is_torsion_free(hess, L), "Hess connection torsion-free");
    c.require(levi_civita_check(hess, catalog::aff_lorentz()).ok,
              "Hess connection Lorentz-compatible");
}

void crit7(Checker& c)
{
    DevelopOptions opts;
    opts.tol = 1e-9;
    double maxdev = 0;

    const auto affg = aff_r();
    auto aff_grid = [&](const FlatAffineGroup& fa, DevelopingFamily fam, double a) {
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                Point x = {0.5 + 2.5 * i / 9.0, -1.0 + 2.0 * j / 9.0};
                auto dev = develop(fa, x, opts);
                auto cf = closed_form_development(fam, {{"alpha", a}}, x);
                maxdev = std::max(maxdev, linf(dev.value, cf));
            }
    };
    const std::vector<std::pair<Rational, double>> a1 = {
        {Rational(1, 2), 0.5}, {Rational(1), 1.0}, {Rational(2), 2.0}};
    for (const auto& [ar, ad] : a1)
        aff_grid(make_flat_affine(affg, catalog::aff_nabla1(ar)),
                 DevelopingFamily::aff1, ad);
    const std::vector<std::pair<Rational, double>> a2 = {
        {Rational(-1), -1.0}, {Rational(0), 0.0}, {Rational(2), 2.0}};
    for (const auto& [ar, ad] : a2)
        aff_grid(make_flat_affine(affg, catalog::aff_nabla2(ar)),
                 DevelopingFamily::aff2, ad);

    const auto oscg = oscillator();
    const std::vector<double> g1 = {-1.5, 0.0, 1.2};
    const std::vector<double> g2 = {-1.0, 0.3, 1.5};
    const std::vector<double> g3 = {-0.8, 0.0, 2.0};
    const std::vector<double> g4 = {-2.0, 0.7, 2.0};
    auto osc_grid = [&](const FlatAffineGroup& fa, DevelopingFamily fam,
                        const std::map<std::string, double>& params) {
        for (double x1 : g1)
            for (double x2 : g2)
                for (double x3 : g3)
                    for (double x4 : g4) {
                        Point x = {x1, x2, x3, x4};
                        auto dev = develop(fa, x, opts);
                        auto cf = closed_form_development(fam, params, x);
                        maxdev = std::max(maxdev, linf(dev.value, cf));
                    }
    };
    for (const auto& t : kTSSamples)
        for (const auto& s : kTSSamples)
            osc_grid(make_flat_affine(oscg, catalog::osc_F1(t, s)),
                     DevelopingFamily::osc1,
                     {{"t", to_double(t)}, {"s", to_double(s)}});
    for (const auto& a : kAlphaSamples)
        for (const auto& t : kTSSamples)
            osc_grid(make_flat_affine(oscg, catalog::osc_F2(a, t)),
                     DevelopingFamily::osc2,
                     {{"alpha", to_double(a)}, {"t", to_double(t)}});
    osc_grid(make_flat_affine(oscg, catalog::osc_F3()), DevelopingFamily::osc3, {});

    c.require(maxdev < 1e-6, "max closed-form deviation " + fmt(maxdev));
    c.note("max developing deviation over all grids: " + fmt(maxdev));
}

void crit8(Checker& c)
{
    auto fa = make_flat_affine(oscillator(), catalog::osc_F4());
    DevelopOptions opts;
    opts.tol = 1e-12;
    std::mt19937 rng(8881);
    std::uniform_real_distribution<double> U(-1.5, 1.5);

    double max_fd = 0, max_cf = 0, max_eta = 0;
    for (int p = 0; p < 20; ++p) {
        Point x(4);
        for (auto& v : x)
            v = U(rng);
        while (std::abs(x[3]) < 0.3)
            x[3] = U(rng);

        auto tr = integrate_development(fa, PathSpec::segment(fa.group.identity, x),
                                        opts);
        Eigen::MatrixXd frame_inv = fa.group.frame(x).inverse();
        Eigen::MatrixXd eta = tr.coframe * frame_inv;

        Eigen::MatrixXd J(4, 4);
        for (int j = 0; j < 4; ++j) {
            const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
            Point xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            auto dp = develop(fa, xp, opts).value;
            auto dm = develop(fa, xm, opts).value;
            for (int i = 0; i < 4; ++i)
                J(i, j) = (dp[i] - dm[i]) / (2 * h);
        }
        max_fd = std::max(max_fd, (J - eta).cwiseAbs().maxCoeff());

        auto cf = closed_form_development(DevelopingFamily::osc4, {}, x);
        max_cf = std::max(max_cf, linf(cf, tr.development));
        max_eta = std::max(
            max_eta, (catalog::fourth_family_coframe(x) - eta).cwiseAbs().maxCoeff());
    }
    c.require(max_fd < 1e-5,
              "finite-difference Jacobian equals the transported coframe (" +
                  fmt(max_fd) + ")");
    c.note("dD vs transported coframe, max componentwise gap: " + fmt(max_fd));
    if (max_cf > 1e-6) {
        c.note("erratum: the reference closed-form components of the fourth-family "
               "development disagree with the integrated development (max deviation " +
               fmt(max_cf) +
               " over 20 points); the reference coframe table deviates from the "
               "integrated one as well (max " +
               fmt(max_eta) +
               ", already nonzero at the origin where the coframe must be the "
               "identity), so the numeric development is authoritative here");
    } else {
        c.note("closed form agrees with the integrated development (max deviation " +
               fmt(max_cf) + ")");
    }
}

void crit9(Checker& c)
{
    DevelopOptions opts;
    opts.tol = 1e-10;
    std::mt19937 rng(9991);
    std::uniform_real_distribution<double> U(-1.0, 1.0);

    auto straighten = [&](const FlatAffineGroup& fa, const Point& start,
                          const Point& v0, double T) {
        auto geo = geodesic(fa, start, v0, T, 240);
        while (geo.exited && T > 1e-3) {
            T /= 2;
            geo = geodesic(fa, start, v0, T, 240);
        }
        if (geo.exited)
            return -1.0; // no usable horizon
        std::vector<Point> img;
        for (std::size_t i = 0; i < geo.points.size(); i += 24)
            img.push_back(develop(fa, geo.points[i], opts).value);
        return collinearity_residual(img);
    };

    double worst = 0;
    auto fao = make_flat_affine(oscillator(), catalog::osc_F3());
    for (int i = 0; i < 10; ++i) {
        Point start(4), v(4);
        for (auto& s : start)
            s = U(rng);
        for (auto& s : v)
            s = 0.8 * U(rng);
        double r = straighten(fao, start, v, 1.2);
        c.require(r >= 0, "osc F3 geodesic has a usable horizon");
        worst = std::max(worst, r);
    }
    c.require(worst < 1e-7, "collinearity on (O, nabla3): " + fmt(worst));

    double worst_aff = 0;
    auto faa = make_flat_affine(aff_r(), catalog::aff_nabla1(1));
    for (int i = 0; i < 10; ++i) {
        Point start = {1.4 + 0.6 * U(rng), U(rng)};
        Point v = {0.6 * U(rng), 0.6 * U(rng)};
        double r = straighten(faa, start, v, 0.8);
        c.require(r >= 0, "aff nabla1 geodesic has a usable horizon");
        worst_aff = std::max(worst_aff, r);
    }
    c.require(worst_aff < 1e-7, "collinearity on (Aff, nabla1): " + fmt(worst_aff));
    c.note("collinearity residuals: oscillator " + fmt(worst) + ", affine " +
           fmt(worst_aff));

    auto fa2 = make_flat_affine(aff_r(), catalog::aff_nabla2(2));
    auto geo = geodesic(fa2, {1.0, 0.0}, {-1.0, 0.0}, 2.0, 4096);
    c.require(geo.exited, "nabla2(2) geodesic exits the chart");
    c.require(geo.exited && geo.exit_time > 0.1 && geo.exit_time < 1.9,
              "exit happens strictly inside the horizon");
    if (geo.exited)
        c.note("incompleteness witness: the nabla2(2) geodesic from the identity "
               "with initial velocity -e1 leaves the chart at t = " +
               fmt(geo.exit_time));
}

void crit10(Checker& c)
{
    std::mt19937 rng(10101);
    std::uniform_real_distribution<double> X(0.6, 2.4), Y(-1.0, 1.0);
    auto sample_points = [&]() {
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 20; ++i)
            pts.push_back({X(rng), Y(rng)});
        return pts;
    };

    const double rf =
        symplectomorphism_residual(catalog::map_f(1.7, "0.3 + 0.1*sin(y)"),
                                   sample_points());
    const double rg = symplectomorphism_residual(catalog::map_g(), sample_points());
    const double rF =
        symplectomorphism_residual(catalog::map_F(1.3, 0.4, 0.2), sample_points());
    const double rG =
        symplectomorphism_residual(catalog::map_G(0.8, -0.6, 1.1), sample_points());
    c.require(rf < 1e-8, "PDE residual for family f: " + fmt(rf));
    c.require(rg < 1e-8, "PDE residual for map g: " + fmt(rg));
    c.require(rF < 1e-8, "PDE residual for map F: " + fmt(rF));
    c.require(rG < 1e-8, "PDE residual for map G: " + fmt(rG));

    DevelopOptions opts;
    opts.tol = 1e-10;
    std::vector<Point> samples;
    for (double x : {0.7, 1.0, 1.6, 2.2})
        for (double y : {-0.8, 0.0, 0.9})
            samples.push_back({x, y});

    auto fa1 = make_flat_affine(aff_r(), catalog::aff_iso1());
    auto F = catalog::map_F(1.3, 0.4, 0.2);
    auto repF = affine_rep(fa1, F, opts);
    const double dF = affine_diagram_residual(fa1, F, repF, samples, opts);
    c.require(dF < 1e-7, "affine diagram residual for F on nabla1: " + fmt(dF));

    auto fa2 = make_flat_affine(aff_r(), catalog::aff_iso2());
    auto G = catalog::map_G(0.8, -0.6, 1.1);
    auto repG = affine_rep(fa2, G, opts);
    const double dG = affine_diagram_residual(fa2, G, repG, samples, opts);
    c.require(dG < 1e-7, "affine diagram residual for G on nabla2: " + fmt(dG));
    c.note("diagram residuals: F " + fmt(dF) + ", G " + fmt(dG));

    // A is a homomorphism: compose two members of the F family.
    const double a1 = 1.3, b1 = 0.4, d1 = 0.2;
    const double a2 = 0.7, b2 = -0.5, d2 = 0.9;
    auto F1 = catalog::map_F(a1, b1, d1);
    auto F2 = catalog::map_F(a2, b2, d2);
    auto F12 = catalog::map_F(a1 * a2, b1 / a2 + a1 * b2, a1 * d2 + d1);
    auto rep1 = affine_rep(fa1, F1, opts);
    auto rep2 = affine_rep(fa1, F2, opts);
    auto rep12 = affine_rep(fa1, F12, opts);
    Point Qc(2);
    for (int i = 0; i < 2; ++i)
        Qc[i] = rep1.Q[i] + rep1.L(i, 0) * rep2.Q[0] + rep1.L(i, 1) * rep2.Q[1];
    Eigen::MatrixXd Lc = rep1.L * rep2.L;
    const double hom = std::max(linf(rep12.Q, Qc),
                                (rep12.L - Lc).cwiseAbs().maxCoeff());
    c.require(hom < 1e-7, "A(F1 o F2) = A(F1) o A(F2): " + fmt(hom));
}

void crit11(Checker& c)
{
    // (a) operator relations == left-symmetric && compatible, random tables
    std::mt19937 rng(111213);
    std::uniform_int_distribution<int> dimD(2, 3), numD(-2, 2), denD(1, 2),
        coin(0, 1);
    std::uniform_real_distribution<double> density(0, 1);
    int agree = 0, true_cases = 0;
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = static_cast<std::size_t>(dimD(rng));
        ProductTable P(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (density(rng) < 0.3)
                        P.set(i, j, k, Rational(numD(rng), denD(rng)));
        StructureConstants L(n);
        if (coin(rng)) {
            L = commutator_bracket(P);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (density(rng) < 0.3)
                            L.set(i, j, k, Rational(numD(rng), denD(rng)));
        }
        const bool lhs = operator_relations_check(P, L).ok;
        const bool rhs = is_left_symmetric(P).ok && is_compatible(P, L).ok;
        if (lhs == rhs)
            ++agree;
        if (lhs)
            ++true_cases;
    }
    c.require(agree == 100, "operator-relation equivalence on random tables (" +
                                std::to_string(agree) + "/100)");
    c.note("random-table equivalence: " + std::to_string(agree) + "/100 agree, " +
           std::to_string(true_cases) + " flat cases");

    // (b) path independence of the development
    DevelopOptions opts;
    opts.tol = 1e-10;
    {
        auto fa = make_flat_affine(oscillator(), catalog::osc_F1(1, Rational(3, 2)));
        const Point id = fa.group.identity;
        const Point x = {0.7, -0.4, 1.1, 0.6};
        const Point w1 = {-0.5, 0.8, 0.2, -0.9};
        const Point w2 = {1.0, -1.0, 0.5, 0.3};
        auto direct = integrate_development(fa, PathSpec::segment(id, x), opts);
        auto dog = integrate_development(fa, PathSpec::through({id, w1, x}), opts);
        auto longer =
            integrate_development(fa, PathSpec::through({id, w1, w2, x}), opts);
        const double gap = std::max(linf(direct.development, dog.development),
                                    linf(direct.development, longer.development));
        c.require(gap < 1e-7, "oscillator development path-independent: " + fmt(gap));
    }
    {
        auto fa = make_flat_affine(aff_r(), catalog::aff_nabla1(1));
        const Point id = fa.group.identity;
        const Point x = {2.2, 0.5};
        const Point w1 = {0.6, -0.7};
        auto direct = integrate_development(fa, PathSpec::segment(id, x), opts);
        auto dog = integrate_development(fa, PathSpec::through({id, w1, x}), opts);
        const double gap = linf(direct.development, dog.development);
        c.require(gap < 1e-7, "affine development path-independent: " + fmt(gap));
    }

    // (c) serialization round trip
    for (const auto& entry : catalog::sample_entries()) {
        const std::string text = write_algebra_file(entry);
        catalog::Entry back;
        bool parsed = true;
        try {
            back = parse_algebra_file_text(text);
        } catch (const std::exception& e) {
            parsed = false;
            c.require(false, "round trip parse of " + entry.name + ": " + e.what());
        }
        if (!parsed)
            continue;
        bool same = back.name == entry.name && back.algebra == entry.algebra &&
                    back.product == entry.product &&
                    back.forms.size() == entry.forms.size() &&
                    back.bivector.has_value() == entry.bivector.has_value();
        for (std::size_t i = 0; same && i < back.forms.size(); ++i)
            same = back.forms[i].first == entry.forms[i].first &&
                   back.forms[i].second.kind == entry.forms[i].second.kind &&
                   back.forms[i].second.m == entry.forms[i].second.m;
        if (same && entry.bivector)
            same = back.bivector->algebra == entry.bivector->algebra &&
                   back.bivector->r == entry.bivector->r;
        same = same && write_algebra_file(back) == text;
        c.require(same, "round trip preserves " + entry.name);
    }
}

struct Budget {
    int index;
    double seconds;
};
constexpr Budget kBudgets[] = {{1, 1.0}, {2, 1.0}, {4, 2.0}, {7, 30.0}, {11, 60.0}};

} // namespace

CriterionResult run_criterion(int index)
{
    static const std::vector<std::pair<std::string, void (*)(Checker&)>> table = {
        {"left-symmetry and compatibility of the catalog tables", crit1},
        {"scalar 2-cohomology dimensions", crit2},
        {"completeness trace criterion", crit3},
        {"Yang-Baxter solutions, dual tables and double pairing", crit4},
        {"dual symplectic product", crit5},
        {"Hess connection", crit6},
        {"developing maps against closed forms", crit7},
        {"fourth-family differential identity dD = eta", crit8},
        {"geodesic straightening and incompleteness witness", crit9},
        {"symplectomorphism PDE and affinity representation", crit10},
        {"property suites: operators, paths, serialization", crit11},
    };
    if (index < 1 || index > static_cast<int>(table.size()))
        throw std::out_of_range("criterion index must be 1..11");

    CriterionResult res;
    res.index = index;
    res.name = table[index - 1].first;
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        table[index - 1].second(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& b : kBudgets)
        if (b.index == index && res.seconds >= b.seconds)
            c.require(false, "runtime budget exceeded: " + fmt(res.seconds) + " s >= " +
                                 fmt(b.seconds) + " s");
    res.pass = c.pass;
    res.notes = std::move(c.notes);
    return res;
}

std::vector<CriterionResult> run_all_criteria()
{
    std::vector<CriterionResult> all;
    for (int i = 1; i <= 11; ++i)
        all.push_back(run_criterion(i));
    return all;
}

} // namespace flataffine
