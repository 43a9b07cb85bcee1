#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace flataffine {

/// Tiny arithmetic-expression AST: + - * / ^, unary minus, numeric literals,
/// named variables and exp/log/sin/cos/sqrt/pow.
class Expr {
public:
    static Expr parse(const std::string& src);

    double eval(const std::map<std::string, double>& env) const;

    struct Node;

private:
    std::shared_ptr<const Node> root_;
};

/// Smooth map between charts, each output component an expression in the
/// input coordinate names.
struct CoordinateMap {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<Expr> outputs;

    std::vector<double> operator()(const std::vector<double>& x) const;
};

/// Parses "(expr, expr, ...)" (outer parentheses optional) into a
/// CoordinateMap over the given input names.
CoordinateMap parse_coordinate_map(const std::string& text, std::vector<std::string> inputs,
                                   std::string name = "map");

/// Central-difference Jacobian with step 1e-6 scaled by coordinate size.
std::vector<std::vector<double>> numeric_jacobian(const CoordinateMap& f,
                                                  const std::vector<double>& x);

template <class F>
std::vector<std::vector<double>> numeric_jacobian_fn(F&& f, const std::vector<double>& x,
                                                     std::size_t out_dim) {
    std::vector<std::vector<double>> J(out_dim, std::vector<double>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j) {
        double h = 1e-6 * std::max(1.0, std::abs(x[j]));
        auto xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        auto fp = f(xp), fm = f(xm);
        for (std::size_t i = 0; i < out_dim; ++i) J[i][j] = (fp[i] - fm[i]) / (2 * h);
    }
    return J;
}

} // namespace flataffine
