#include "flataffine/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace flataffine {

struct Expr::Node {
    enum class Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
    double num = 0;
    std::string name; // variable or function name
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        auto e = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("expression error at offset " + std::to_string(pos_) + ": " +
                                    why + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr sum() {
        auto e = term();
        for (;;) {
            if (eat('+')) e = make({Expr::Node::Kind::Add, 0, "", e, term()});
            else if (eat('-')) e = make({Expr::Node::Kind::Sub, 0, "", e, term()});
            else return e;
        }
    }

    NodePtr term() {
        auto e = unary();
        for (;;) {
            if (eat('*')) e = make({Expr::Node::Kind::Mul, 0, "", e, unary()});
            else if (eat('/')) e = make({Expr::Node::Kind::Div, 0, "", e, unary()});
            else return e;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make({Expr::Node::Kind::Neg, 0, "", unary(), nullptr});
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {
        auto base = atom();
        if (eat('^')) // right associative, exponent may itself be signed
            return make({Expr::Node::Kind::Pow, 0, "", base, unary()});
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        fail("unexpected character");
    }

    NodePtr number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        try {
            return make({Expr::Node::Kind::Num, std::stod(s_.substr(start, pos_ - start)), "",
                         nullptr, nullptr});
        } catch (const std::exception&) {
            fail("bad number");
        }
    }

    NodePtr ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (peek() == '(') {
            ++pos_;
            auto a = sum();
            NodePtr b;
            if (eat(',')) b = sum();
            if (!eat(')')) fail("expected ')'");
            if (name == "pow") {
                if (!b) fail("pow needs two arguments");
                return make({Expr::Node::Kind::Pow, 0, "", a, b});
            }
            if (b) fail("function takes one argument");
            static const char* fns[] = {"exp", "log", "sin", "cos", "sqrt"};
            for (auto* f : fns)
                if (name == f) return make({Expr::Node::Kind::Call, 0, name, a, nullptr});
            fail("unknown function '" + name + "'");
        }
        if (name == "pi")
            return make({Expr::Node::Kind::Num, 3.14159265358979323846, "", nullptr, nullptr});
        return make({Expr::Node::Kind::Var, 0, name, nullptr, nullptr});
    }
};

double eval_node(const Expr::Node& n, const std::map<std::string, double>& env) {
    using K = Expr::Node::Kind;
    switch (n.kind) {
    case K::Num: return n.num;
    case K::Var: {
        auto it = env.find(n.name);
        if (it == env.end()) throw std::invalid_argument("unbound variable '" + n.name + "'");
        return it->second;
    }
    case K::Neg: return -eval_node(*n.a, env);
    case K::Add: return eval_node(*n.a, env) + eval_node(*n.b, env);
    case K::Sub: return eval_node(*n.a, env) - eval_node(*n.b, env);
    case K::Mul: return eval_node(*n.a, env) * eval_node(*n.b, env);
    case K::Div: return eval_node(*n.a, env) / eval_node(*n.b, env);
    case K::Pow: return std::pow(eval_node(*n.a, env), eval_node(*n.b, env));
    case K::Call: {
        double v = eval_node(*n.a, env);
        if (n.name == "exp") return std::exp(v);
        if (n.name == "log") return std::log(v);
        if (n.name == "sin") return std::sin(v);
        if (n.name == "cos") return std::cos(v);
        if (n.name == "sqrt") return std::sqrt(v);
        throw std::logic_error("unreachable");
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

Expr Expr::parse(const std::string& src) {
    Expr e;
    e.root_ = Parser(src).parse();
    return e;
}

double Expr::eval(const std::map<std::string, double>& env) const {
    if (!root_) throw std::logic_error("empty expression");
    return eval_node(*root_, env);
}

std::vector<double> CoordinateMap::operator()(const std::vector<double>& x) const {
    if (x.size() != inputs.size()) throw std::invalid_argument("coordinate map arity mismatch");
    std::map<std::string, double> env;
    for (std::size_t i = 0; i < inputs.size(); ++i) env[inputs[i]] = x[i];
    std::vector<double> out;
    out.reserve(outputs.size());
    for (const auto& e : outputs) out.push_back(e.eval(env));
    return out;
}

CoordinateMap parse_coordinate_map(const std::string& text, std::vector<std::string> inputs,
                                   std::string name) {
    std::string body = text;
    const auto first = body.find_first_not_of(" \t");
    const auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty map expression");
    body = body.substr(first, last - first + 1);
    if (body.front() == '(' && body.back() == ')') {
        // Strip the outer parentheses only if they enclose the whole string.
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < body.size(); ++i) {
            if (body[i] == '(') ++depth;
            if (body[i] == ')') --depth;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (wraps) body = body.substr(1, body.size() - 2);
    }

    CoordinateMap m;
    m.name = std::move(name);
    m.inputs = std::move(inputs);
    int depth = 0;
    std::string piece;
    auto flush = [&] {
        if (piece.find_first_not_of(" \t") == std::string::npos)
            throw std::invalid_argument("empty component in map expression");
        m.outputs.push_back(Expr::parse(piece));
        piece.clear();
    };
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        piece += c;
    }
    flush();
    return m;
}

std::vector<std::vector<double>> numeric_jacobian(const CoordinateMap& f,
                                                  const std::vector<double>& x) {
    return numeric_jacobian_fn([&](const std::vector<double>& p) { return f(p); }, x,
                               f.outputs.size());
}

} // namespace flataffine
