#include "idv/constants.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace idv {

namespace {

const std::map<std::string, double, std::less<>>& registry() {
    static const std::map<std::string, double, std::less<>> table = {
        {"pi", std::numbers::pi},
        {"e", std::numbers::e},
        {"euler_gamma", 0.57721566490153286},
        {"log2", std::numbers::ln2},
        {"catalan", 0.91596559417721902},
        {"zeta3", 1.2020569031595943},
        {"zeta5", 1.0369277551433699},
        {"sqrt2", std::numbers::sqrt2},
        {"sqrt3", std::numbers::sqrt3},
    };
    return table;
}

const std::vector<std::string> kUnary = {"neg", "sqrt", "exp", "log", "sin", "cos",
                                         "tan", "sinh", "cosh", "atan", "asinh"};
const std::vector<std::string> kBinary = {"add", "sub", "mul", "div", "pow"};

bool contains(const std::vector<std::string>& v, std::string_view s) {
    for (const auto& x : v)
        if (x == s) return true;
    return false;
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string("non-finite value from ") + what);
    return v;
}

}  // namespace

double const_value(std::string_view name) {
    const auto& t = registry();
    auto it = t.find(name);
    if (it == t.end()) throw UnknownName("unknown constant: " + std::string(name));
    return it->second;
}

const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

namespace cf {

Expr rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational literal with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Rational;
    n->num = num;
    n->den = den;
    return n;
}

Expr c(std::string_view name) {
    const_value(name);  // throws on unknown names
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->name = std::string(name);
    return n;
}

Expr unary(std::string_view op, Expr a) {
    if (!contains(kUnary, op)) throw UnknownName("unknown unary op: " + std::string(op));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unary;
    n->name = std::string(op);
    n->lhs = std::move(a);
    return n;
}

Expr binary(std::string_view op, Expr a, Expr b) {
    if (!contains(kBinary, op)) throw UnknownName("unknown binary op: " + std::string(op));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Binary;
    n->name = std::string(op);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

Expr operator+(Expr a, Expr b) { return binary("add", std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return binary("sub", std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return binary("mul", std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return binary("div", std::move(a), std::move(b)); }
Expr operator-(Expr a) { return neg(std::move(a)); }
Expr operator*(std::int64_t k, Expr b) { return rat(k) * std::move(b); }

}  // namespace cf

double cf_eval(const ClosedForm& expr) {
    using cf::Kind;
    if (!expr) throw DomainError("empty expression");
    switch (expr->kind) {
    case Kind::Rational:
        return static_cast<double>(expr->num) / static_cast<double>(expr->den);
    case Kind::Constant:
        return const_value(expr->name);
    case Kind::Unary: {
        const double x = cf_eval(expr->lhs);
        const std::string& op = expr->name;
        if (op == "neg") return -x;
        if (op == "sqrt") {
            if (x < 0) throw DomainError("sqrt of negative value");
            return std::sqrt(x);
        }
        if (op == "exp") return checked(std::exp(x), "exp");
        if (op == "log") {
            if (x <= 0) throw DomainError("log of non-positive value");
            return std::log(x);
        }
        if (op == "sin") return std::sin(x);
        if (op == "cos") return std::cos(x);
        if (op == "tan") return checked(std::tan(x), "tan");
        if (op == "sinh") return checked(std::sinh(x), "sinh");
        if (op == "cosh") return checked(std::cosh(x), "cosh");
        if (op == "atan") return std::atan(x);
        if (op == "asinh") return std::asinh(x);
        break;
    }
    case Kind::Binary: {
        const double a = cf_eval(expr->lhs);
        const double b = cf_eval(expr->rhs);
        const std::string& op = expr->name;
        if (op == "add") return a + b;
        if (op == "sub") return a - b;
        if (op == "mul") return a * b;
        if (op == "div") {
            if (b == 0) throw DomainError("division by zero");
            return a / b;
        }
        if (op == "pow") {
            if (a < 0 && b != std::floor(b)) throw DomainError("negative base with fractional power");
            if (a == 0 && b < 0) throw DomainError("zero to a negative power");
            return checked(std::pow(a, b), "pow");
        }
        break;
    }
    }
    throw UnknownName("malformed expression node");
}

std::string cf_serialize(const ClosedForm& expr) {
    using cf::Kind;
    switch (expr->kind) {
    case Kind::Rational:
        if (expr->den == 1) return std::to_string(expr->num);
        return std::to_string(expr->num) + "/" + std::to_string(expr->den);
    case Kind::Constant:
        return expr->name;
    case Kind::Unary:
        return "(" + expr->name + " " + cf_serialize(expr->lhs) + ")";
    case Kind::Binary:
        return "(" + expr->name + " " + cf_serialize(expr->lhs) + " " + cf_serialize(expr->rhs) + ")";
    }
    return {};
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw PreconditionError("closed-form parse error at " + std::to_string(pos) + ": " + msg);
    }
    std::string_view atom() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != '(' && s[pos] != ')' &&
               !std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos) fail("expected atom");
        return s.substr(start, pos - start);
    }
    ClosedForm expr() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            std::string op(atom());
            ClosedForm a = expr();
            skip();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                return cf::unary(op, a);
            }
            ClosedForm b = expr();
            skip();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return cf::binary(op, a, b);
        }
        std::string_view tok = atom();
        if (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-') {
            auto slash = tok.find('/');
            try {
                std::int64_t num = std::stoll(std::string(tok.substr(0, slash)));
                std::int64_t den = slash == std::string_view::npos ? 1 : std::stoll(std::string(tok.substr(slash + 1)));
                return cf::rat(num, den);
            } catch (const std::logic_error&) {
                fail("bad rational literal");
            }
        }
        return cf::c(tok);
    }
};

}  // namespace

ClosedForm cf_parse(std::string_view text) {
    Parser p{text};
    ClosedForm e = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

int cf_depth(const ClosedForm& expr) {
    if (!expr) return 0;
    int d = 0;
    if (expr->lhs) d = std::max(d, cf_depth(expr->lhs));
    if (expr->rhs) d = std::max(d, cf_depth(expr->rhs));
    return d + 1;
}

}  // namespace idv
