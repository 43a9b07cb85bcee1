#pragma once

#include "flataffine/algebra.hpp"
#include "flataffine/expr.hpp"
#include "flataffine/yang_baxter.hpp"

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace flataffine {
namespace catalog {

// ------------------------------------------------------------------ algebras

StructureConstants oscillator();                         // (e0, e1, e2, d)
StructureConstants euclidean2();                         // (e1, e2, d)
StructureConstants aff_r();                              // (e1, e2), [e1,e2] = e2
StructureConstants heisenberg();                         // (e0, e1, e2), [e1,e2] = e0
StructureConstants abelian(std::size_t n);
StructureConstants dual_oscillator(const std::array<Rational, 3>& alpha);

/// Left-symmetric product on the dual induced by r (the table the dual
/// bracket is the commutator of).
ProductTable dual_oscillator_product(const std::array<Rational, 3>& alpha);

// -------------------------------------------- left-symmetric product tables

// Euclidean-plane families (basis e1, e2, d).
ProductTable e2_F1(const Rational& alpha);
ProductTable e2_F2(const Rational& alpha); // alpha != 0
ProductTable e2_F3();
ProductTable e2_F4();

// Oscillator families (basis e0, e1, e2, d); q = 1/2 matches the oscillator
// bracket exactly, other q values give the rescaled central bracket.
ProductTable osc_F1(const Rational& t, const Rational& s, const Rational& q = Rational(1, 2));
ProductTable osc_F2(const Rational& alpha, const Rational& t,
                    const Rational& q = Rational(1, 2)); // alpha != 0
ProductTable osc_F3(const Rational& q = Rational(1, 2));
ProductTable osc_F4(const Rational& q = Rational(1, 2));

// Aff(R)0 connection tables (basis e1, e2).
ProductTable aff_nabla1(const Rational& alpha);
ProductTable aff_nabla2(const Rational& alpha);
ProductTable aff_iso1(); // symplectic connection, also the Hess table
ProductTable aff_iso2();
ProductTable aff_odot(); // product of the symplectic recipe on aff(R)

// ------------------------------------------------------------------- forms

BilinearForm oscillator_metric(); // bi-invariant: <e0,d> = 1, <e1,e1> = <e2,e2> = 1
BilinearForm dual_omega();        // w(e1*,e2*) = w(e0*,d*) = 1, blocks orthogonal
BilinearForm aff_omega();         // w(e1,e2) = -1 (left-invariant -dx^dy/x^2 at identity)
BilinearForm aff_lorentz();       // <e1,e2> = 1, <ei,ei> = 0

Bivector oscillator_r(const std::array<Rational, 3>& alpha); // a1 e0^e1 + a2 e0^e2 + a3 e0^d

// ------------------------------------------------------------ planar maps

// f(x,y) = (a x e^y / (1 + a x e^y p(y)), a e^y); p given as an expression in y.
CoordinateMap map_f(double a, const std::string& p_expr);
// g(x,y) = (e^y, e^y / x).
CoordinateMap map_g();
// h(x,y) = (p(x), p(x)^2 y / (p'(x) x^2) + l(x)); p' supplied explicitly.
CoordinateMap map_h(const std::string& p_expr, const std::string& dp_expr,
                    const std::string& l_expr);
// F(x,y) = (a x, -b/x + a y + d).
CoordinateMap map_F(double a, double b, double d);
// G(x,y) = (a x, -2 b sqrt(x) + a y + d).
CoordinateMap map_G(double a, double b, double d);
CoordinateMap identity_map(std::vector<std::string> vars);

// Reference coframe of the fourth oscillator family: row i holds the dx_j
// coefficients of the i-th component at x. Shipped for cross-checking the
// integrator; the integrated coframe is authoritative.
Eigen::MatrixXd fourth_family_coframe(const std::vector<double>& x);

// ------------------------------------------------------- serializable list

struct Entry {
    std::string name;
    StructureConstants algebra;
    std::optional<ProductTable> product;
    std::vector<std::pair<std::string, BilinearForm>> forms;
    std::optional<Bivector> bivector;
};

// Representative catalog objects at fixed parameter samples (used for
// serialization round-trips and the validation command).
std::vector<Entry> sample_entries();

} // namespace catalog
} // namespace flataffine
