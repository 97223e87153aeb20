#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "idv/errors.hpp"

namespace idv {

// Named constants. The four without a cheap closed expression (zeta3, zeta5,
// catalan, euler_gamma) are stored as 17-digit literals; tests recompute them.
double const_value(std::string_view name);
const std::vector<std::string>& constant_names();

namespace cf {

enum class Kind { Rational, Constant, Unary, Binary };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    std::int64_t num = 0;  // Rational
    std::int64_t den = 1;
    std::string name;      // constant name or operator token
    Expr lhs, rhs;         // rhs unused for unary nodes
};

Expr rat(std::int64_t num, std::int64_t den = 1);
Expr c(std::string_view name);
Expr unary(std::string_view op, Expr a);
Expr binary(std::string_view op, Expr a, Expr b);

inline Expr sqrt(Expr a) { return unary("sqrt", std::move(a)); }
inline Expr exp(Expr a) { return unary("exp", std::move(a)); }
inline Expr log(Expr a) { return unary("log", std::move(a)); }
inline Expr sin(Expr a) { return unary("sin", std::move(a)); }
inline Expr cos(Expr a) { return unary("cos", std::move(a)); }
inline Expr tan(Expr a) { return unary("tan", std::move(a)); }
inline Expr sinh(Expr a) { return unary("sinh", std::move(a)); }
inline Expr cosh(Expr a) { return unary("cosh", std::move(a)); }
inline Expr atan(Expr a) { return unary("atan", std::move(a)); }
inline Expr asinh(Expr a) { return unary("asinh", std::move(a)); }
inline Expr neg(Expr a) { return unary("neg", std::move(a)); }
inline Expr pow(Expr a, Expr b) { return binary("pow", std::move(a), std::move(b)); }

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr operator*(std::int64_t k, Expr b);

}  // namespace cf

using ClosedForm = cf::Expr;

double cf_eval(const ClosedForm& expr);
std::string cf_serialize(const ClosedForm& expr);
ClosedForm cf_parse(std::string_view text);
int cf_depth(const ClosedForm& expr);

}  // namespace idv
