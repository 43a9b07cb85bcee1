#include "flataffine/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace flataffine {
namespace catalog {

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return "(" + std::string(buf) + ")";
}

} // namespace

// ------------------------------------------------------------------ algebras

StructureConstants oscillator()
{
    StructureConstants g(4, {"e0", "e1", "e2", "d"});
    g.set(1, 2, 0, 1);  // [e1, e2] = e0
    g.set(3, 1, 2, 1);  // [d, e1] = e2
    g.set(3, 2, 1, -1); // [d, e2] = -e1
    return g;
}

StructureConstants euclidean2()
{
    StructureConstants g(3, {"e1", "e2", "d"});
    g.set(2, 0, 1, 1);  // [d, e1] = e2
    g.set(2, 1, 0, -1); // [d, e2] = -e1
    return g;
}

StructureConstants aff_r()
{
    StructureConstants g(2, {"e1", "e2"});
    g.set(0, 1, 1, 1); // [e1, e2] = e2
    return g;
}

StructureConstants heisenberg()
{
    StructureConstants g(3, {"e0", "e1", "e2"});
    g.set(1, 2, 0, 1); // [e1, e2] = e0
    return g;
}

StructureConstants abelian(std::size_t n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("e" + std::to_string(i + 1));
    return StructureConstants(n, std::move(labels));
}

StructureConstants dual_oscillator(const std::array<Rational, 3>& a)
{
    StructureConstants g(4, {"e0*", "e1*", "e2*", "d*"});
    // [e0*, e1*] = -a2 d* + a3 e2*
    g.set(0, 1, 3, -a[1]);
    g.set(0, 1, 2, a[2]);
    // [e0*, e2*] = a1 d* - a3 e1*
    g.set(0, 2, 3, a[0]);
    g.set(0, 2, 1, -a[2]);
    return g;
}

ProductTable dual_oscillator_product(const std::array<Rational, 3>& a)
{
    ProductTable p(4, {"e0*", "e1*", "e2*", "d*"});
    // e0* e0* = a2 e1* - a1 e2*
    p.set(0, 0, 1, a[1]);
    p.set(0, 0, 2, -a[0]);
    // e0* e1* = -a2 d* + a3 e2*
    p.set(0, 1, 3, -a[1]);
    p.set(0, 1, 2, a[2]);
    // e0* e2* = a1 d* - a3 e1*
    p.set(0, 2, 3, a[0]);
    p.set(0, 2, 1, -a[2]);
    return p;
}

// -------------------------------------------- left-symmetric product tables

ProductTable e2_F1(const Rational& alpha)
{
    ProductTable p(3, {"e1", "e2", "d"});
    p.set(0, 2, 0, alpha); // e1 d = a e1
    p.set(1, 2, 1, alpha); // e2 d = a e2
    p.set(2, 0, 0, alpha); // d e1 = a e1 + e2
    p.set(2, 0, 1, 1);
    p.set(2, 1, 0, -1);    // d e2 = -e1 + a e2
    p.set(2, 1, 1, alpha);
    p.set(2, 2, 2, alpha); // d d = a d
    return p;
}

ProductTable e2_F2(const Rational& alpha)
{
    if (alpha == 0)
        throw std::invalid_argument("e2_F2: alpha must be nonzero");
    ProductTable p(3, {"e1", "e2", "d"});
    p.set(2, 0, 1, 1);     // d e1 = e2
    p.set(2, 1, 0, -1);    // d e2 = -e1
    p.set(2, 2, 2, alpha); // d d = a d
    return p;
}

ProductTable e2_F3()
{
    ProductTable p(3, {"e1", "e2", "d"});
    p.set(0, 0, 2, 1);  // e1 e1 = d
    p.set(1, 1, 2, 1);  // e2 e2 = d
    p.set(2, 0, 1, 1);  // d e1 = e2
    p.set(2, 1, 0, -1); // d e2 = -e1
    return p;
}

ProductTable e2_F4()
{
    ProductTable p(3, {"e1", "e2", "d"});
    // e1 e1 = e1 d = e2 e2 = e1 + 2 e2 - d
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 2}, {1, 1}}) {
        p.set(i, j, 0, 1);
        p.set(i, j, 1, 2);
        p.set(i, j, 2, -1);
    }
    p.set(1, 2, 0, 2);  // e2 d = 2 e1 + 4 e2 - 2 d
    p.set(1, 2, 1, 4);
    p.set(1, 2, 2, -2);
    p.set(2, 0, 0, 1);  // d e1 = e1 + 3 e2 - d
    p.set(2, 0, 1, 3);
    p.set(2, 0, 2, -1);
    p.set(2, 1, 0, 1);  // d e2 = e1 + 4 e2 - 2 d
    p.set(2, 1, 1, 4);
    p.set(2, 1, 2, -2);
    p.set(2, 2, 0, 3);  // d d = 3 e1 + 11 e2 - 5 d
    p.set(2, 2, 1, 11);
    p.set(2, 2, 2, -5);
    return p;
}

ProductTable osc_F1(const Rational& t, const Rational& s, const Rational& q)
{
    ProductTable p(4, {"e0", "e1", "e2", "d"});
    p.set(1, 1, 0, t);  // e1 e1 = t e0
    p.set(1, 2, 0, q);  // e1 e2 = q e0
    p.set(2, 1, 0, -q); // e2 e1 = -q e0
    p.set(2, 2, 0, t);  // e2 e2 = t e0
    p.set(3, 1, 2, 1);  // d e1 = e2
    p.set(3, 2, 1, -1); // d e2 = -e1
    p.set(3, 3, 0, s);  // d d = s e0
    return p;
}

ProductTable osc_F2(const Rational& alpha, const Rational& t, const Rational& q)
{
    if (alpha == 0)
        throw std::invalid_argument("osc_F2: alpha must be nonzero");
    ProductTable p(4, {"e0", "e1", "e2", "d"});
    p.set(1, 1, 0, t);
    p.set(1, 2, 0, q);
    p.set(2, 1, 0, -q);
    p.set(2, 2, 0, t);
    p.set(3, 1, 2, 1);
    p.set(3, 2, 1, -1);
    p.set(3, 3, 3, alpha); // d d = a d
    return p;
}

ProductTable osc_F3(const Rational& q)
{
    ProductTable p(4, {"e0", "e1", "e2", "d"});
    p.set(1, 1, 3, 1);  // e1 e1 = d
    p.set(1, 2, 0, q);
    p.set(2, 1, 0, -q);
    p.set(2, 2, 3, 1);  // e2 e2 = d
    p.set(3, 1, 2, 1);
    p.set(3, 2, 1, -1);
    return p;
}

ProductTable osc_F4(const Rational& q)
{
    const Rational h(1, 2);
    ProductTable p(4, {"e0", "e1", "e2", "d"});
    // e1 e1 = e1/2 + e2 - d
    p.set(1, 1, 1, h);
    p.set(1, 1, 2, 1);
    p.set(1, 1, 3, -1);
    // e1 e2 = q e0
    p.set(1, 2, 0, q);
    // e1 d = q e0 + e1/4 + e2/2 - d/2
    p.set(1, 3, 0, q);
    p.set(1, 3, 1, Rational(1, 4));
    p.set(1, 3, 2, h);
    p.set(1, 3, 3, -h);
    // e2 e1 = -q e0
    p.set(2, 1, 0, -q);
    // e2 e2 = e1/2 + e2 - d
    p.set(2, 2, 1, h);
    p.set(2, 2, 2, 1);
    p.set(2, 2, 3, -1);
    // e2 d = -(q/2) e0 + e1/2 + e2 - d
    p.set(2, 3, 0, -q / 2);
    p.set(2, 3, 1, h);
    p.set(2, 3, 2, 1);
    p.set(2, 3, 3, -1);
    // d e1 = q e0 + e1/4 + 3 e2/2 - d/2
    p.set(3, 1, 0, q);
    p.set(3, 1, 1, Rational(1, 4));
    p.set(3, 1, 2, Rational(3, 2));
    p.set(3, 1, 3, -h);
    // d e2 = -(q/2) e0 - e1/2 + e2 - d
    p.set(3, 2, 0, -q / 2);
    p.set(3, 2, 1, -h);
    p.set(3, 2, 2, 1);
    p.set(3, 2, 3, -1);
    // d d = -3 e1/8 + 7 e2/4 - 5 d/4
    p.set(3, 3, 1, Rational(-3, 8));
    p.set(3, 3, 2, Rational(7, 4));
    p.set(3, 3, 3, Rational(-5, 4));
    return p;
}

ProductTable aff_nabla1(const Rational& alpha)
{
    ProductTable p(2, {"e1", "e2"});
    p.set(0, 0, 0, alpha); // e1 e1 = a e1 + a e2
    p.set(0, 0, 1, alpha);
    p.set(0, 1, 1, 1);     // e1 e2 = e2
    return p;
}

ProductTable aff_nabla2(const Rational& alpha)
{
    ProductTable p(2, {"e1", "e2"});
    p.set(0, 0, 0, alpha);      // e1 e1 = a e1 - a e2
    p.set(0, 0, 1, -alpha);
    p.set(0, 1, 1, alpha + 1);  // e1 e2 = (a+1) e2
    p.set(1, 0, 1, alpha);      // e2 e1 = a e2
    return p;
}

ProductTable aff_iso1()
{
    ProductTable p(2, {"e1", "e2"});
    p.set(0, 0, 0, -1); // e1 e1 = -e1
    p.set(0, 1, 1, 1);  // e1 e2 = e2
    return p;
}

ProductTable aff_iso2()
{
    ProductTable p(2, {"e1", "e2"});
    p.set(0, 0, 0, Rational(-1, 2)); // e1 e1 = -e1/2
    p.set(0, 1, 1, Rational(1, 2));  // e1 e2 = e2/2
    p.set(1, 0, 1, Rational(-1, 2)); // e2 e1 = -e2/2
    return p;
}

ProductTable aff_odot()
{
    ProductTable p(2, {"e1", "e2"});
    p.set(0, 0, 0, -1); // e1 . e1 = -e1
    p.set(1, 0, 1, -1); // e2 . e1 = -e2
    return p;
}

// ------------------------------------------------------------------- forms

BilinearForm oscillator_metric()
{
    RatMat m(4, 4);
    m(0, 3) = 1;
    m(3, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    return BilinearForm(FormKind::Symmetric, m);
}

BilinearForm dual_omega()
{
    RatMat m(4, 4);
    m(0, 3) = 1; // w(e0*, d*) = 1
    m(3, 0) = -1;
    m(1, 2) = 1; // w(e1*, e2*) = 1
    m(2, 1) = -1;
    return BilinearForm(FormKind::Antisymmetric, m);
}

BilinearForm aff_omega()
{
    RatMat m(2, 2);
    m(0, 1) = -1;
    m(1, 0) = 1;
    return BilinearForm(FormKind::Antisymmetric, m);
}

BilinearForm aff_lorentz()
{
    RatMat m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    return BilinearForm(FormKind::Symmetric, m);
}

Bivector oscillator_r(const std::array<Rational, 3>& a)
{
    RatMat r(4, 4);
    r(0, 1) = a[0];
    r(1, 0) = -a[0];
    r(0, 2) = a[1];
    r(2, 0) = -a[1];
    r(0, 3) = a[2];
    r(3, 0) = -a[2];
    return Bivector(oscillator(), r);
}

// ------------------------------------------------------------ planar maps

CoordinateMap map_f(double a, const std::string& p_expr)
{
    const std::string u = num(a) + "*x*exp(y)";
    const std::string text =
        u + "/(1 + " + u + "*(" + p_expr + ")), " + num(a) + "*exp(y)";
    return parse_coordinate_map(text, {"x", "y"}, "f");
}

CoordinateMap map_g()
{
    return parse_coordinate_map("exp(y), exp(y)/x", {"x", "y"}, "g");
}

CoordinateMap map_h(const std::string& p_expr, const std::string& dp_expr,
                    const std::string& l_expr)
{
    const std::string text = "(" + p_expr + "), ((" + p_expr + ")^2*y)/((" +
                             dp_expr + ")*x^2) + (" + l_expr + ")";
    return parse_coordinate_map(text, {"x", "y"}, "h");
}

CoordinateMap map_F(double a, double b, double d)
{
    const std::string text = num(a) + "*x, -" + num(b) + "/x + " + num(a) +
                             "*y + " + num(d);
    return parse_coordinate_map(text, {"x", "y"}, "F");
}

CoordinateMap map_G(double a, double b, double d)
{
    const std::string text = num(a) + "*x, -2*" + num(b) + "*sqrt(x) + " +
                             num(a) + "*y + " + num(d);
    return parse_coordinate_map(text, {"x", "y"}, "G");
}

CoordinateMap identity_map(std::vector<std::string> vars)
{
    std::string text;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i)
            text += ", ";
        text += vars[i];
    }
    return parse_coordinate_map(text, std::move(vars), "id");
}

Eigen::MatrixXd fourth_family_coframe(const std::vector<double>& x)
{
    if (x.size() != 4)
        throw std::invalid_argument("fourth_family_coframe: need 4 coordinates");
    const double x2 = x[1], x3 = x[2], x4 = x[3];
    const double c = std::cos(x4), s = std::sin(x4);

    Eigen::MatrixXd eta = Eigen::MatrixXd::Zero(4, 4);
    eta(0, 0) = 1;
    eta(0, 1) = 0.5 * ((1 - x3) * c + (1 + x2) * s - 0.5);
    eta(0, 2) = 0.5 * ((1 + x2) * c + (x3 - 1) * s - 1);
    eta(0, 3) = 0.5 * ((1.5 + x2 - 0.5 * x3) * c + (0.5 * x2 + x3 - 0.5) * s - 1.25);

    eta(1, 1) = 0.5 * ((1 + x2) * c + (0.5 + x3) * s + 1);
    eta(1, 2) = 0.5 * ((0.5 + x3) * c - (x2 + 1) * s - 0.5);
    eta(1, 3) = 0.5 * ((1 + 0.5 * x2 + x3) * c + (x3 - x2 - 0.75) * s - 1);

    eta(2, 1) = (x2 - 1) * c + (1.5 + x3) * s + 1;
    eta(2, 2) = (1.5 + x3) * c + (1 - x2) * s - 0.5;
    eta(2, 3) = (1 + 0.5 * x2 + x3) * c + (0.5 * x3 - x2 + 1.75) * s - 1;

    eta(3, 1) = (1 - x2) * c - (0.5 + x3) * s - 1;
    eta(3, 2) = 0.5 - (0.5 + x3) * c + (x2 - 1) * s;
    eta(3, 3) = 1 - (0.5 * x2 + x3) * c + (x2 - 0.5 * x3 - 1.25) * s;
    return eta;
}

// ------------------------------------------------------- serializable list

std::vector<Entry> sample_entries()
{
    std::vector<Entry> out;

    Entry osc1;
    osc1.name = "oscillator-F1-t1-s1";
    osc1.algebra = oscillator();
    osc1.product = osc_F1(1, 1);
    osc1.forms.emplace_back("metric", oscillator_metric());
    out.push_back(std::move(osc1));

    Entry osc3;
    osc3.name = "oscillator-F3";
    osc3.algebra = oscillator();
    osc3.product = osc_F3();
    osc3.bivector = oscillator_r({1, 1, 0});
    out.push_back(std::move(osc3));

    Entry e2;
    e2.name = "euclidean2-F4";
    e2.algebra = euclidean2();
    e2.product = e2_F4();
    out.push_back(std::move(e2));

    Entry aff;
    aff.name = "aff-nabla2-alpha2";
    aff.algebra = aff_r();
    aff.product = aff_nabla2(2);
    aff.forms.emplace_back("omega", aff_omega());
    aff.forms.emplace_back("lorentz", aff_lorentz());
    out.push_back(std::move(aff));

    Entry dual;
    dual.name = "dual-oscillator-110";
    dual.algebra = dual_oscillator({1, 1, 0});
    dual.forms.emplace_back("omega", dual_omega());
    out.push_back(std::move(dual));

    Entry heis;
    heis.name = "heisenberg";
    heis.algebra = heisenberg();
    out.push_back(std::move(heis));

    return out;
}

} // namespace catalog
} // namespace flataffine
