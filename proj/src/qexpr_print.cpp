#include "podium/qexpr.hpp"

namespace podium::qexpr {

namespace {

bool same(const IExprPtr& a, const IExprPtr& b) { return a && b ? *a == *b : a == b; }
bool same(const ExprPtr& a, const ExprPtr& b) { return a && b ? *a == *b : a == b; }

// Binding strength of the printed form; a child printed in a context that
// demands more gets parenthesized.
enum Level { kSum = 1, kProduct = 2, kFactor = 3, kBase = 4 };

std::string wrap(const std::string& s, int level, int context)
{
    return level < context ? "(" + s + ")" : s;
}

std::string print_i(const IExpr& e, int context)
{
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ILit>) {
                return n.value.get_str();
            } else if constexpr (std::is_same_v<T, IVar>) {
                return n.name;
            } else if constexpr (std::is_same_v<T, IBinary>) {
                if (n.op == IOp::Mul)
                    return wrap(print_i(*n.lhs, kProduct) + "*" + print_i(*n.rhs, kFactor),
                                kProduct, context);
                const char* op = n.op == IOp::Add ? " + " : " - ";
                return wrap(print_i(*n.lhs, kSum) + op + print_i(*n.rhs, kProduct), kSum,
                            context);
            } else if constexpr (std::is_same_v<T, IExactDiv>) {
                return wrap(print_i(*n.operand, kProduct) + " div " + n.divisor.get_str(),
                            kProduct, context);
            } else if constexpr (std::is_same_v<T, ICeil2>) {
                return "ceil2(" + print_i(*n.operand, kSum) + ")";
            } else {
                return "(-1)^(" + print_i(*n.exponent, kSum) + ")";
            }
        },
        e.node);
}

std::string qpow(Sign s, Order k)
{
    return std::string(s == Sign::Minus ? "-" : "") + "q^" + std::to_string(k);
}

std::string print_e(const Expr& e, int context)
{
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                return n.value.get_str();
            } else if constexpr (std::is_same_v<T, QPow>) {
                return wrap("q^" + std::to_string(n.k), kFactor, context);
            } else if constexpr (std::is_same_v<T, Poch>) {
                return "poch(" + qpow(n.sign, n.a) + ", q^" + std::to_string(n.b) + ")";
            } else if constexpr (std::is_same_v<T, GfRef>) {
                return "gf(" + std::string(name(n.id)) + ")";
            } else if constexpr (std::is_same_v<T, Theta>) {
                return "theta{" + n.var + " in " +
                       (n.domain == Domain::AllIntegers ? "Z" : "N") + "}(" +
                       print_i(*n.weight, kSum) + "; " + print_i(*n.exponent, kSum) + ")";
            } else if constexpr (std::is_same_v<T, Subst>) {
                return "subst(" + print_e(*n.operand, kSum) + ", " + qpow(n.sign, n.k) + ")";
            } else if constexpr (std::is_same_v<T, Binary>) {
                switch (n.op) {
                case BinOp::Add:
                    return wrap(print_e(*n.lhs, kSum) + " + " + print_e(*n.rhs, kProduct), kSum,
                                context);
                case BinOp::Sub:
                    return wrap(print_e(*n.lhs, kSum) + " - " + print_e(*n.rhs, kProduct), kSum,
                                context);
                case BinOp::Mul:
                    return wrap(print_e(*n.lhs, kProduct) + " * " + print_e(*n.rhs, kFactor),
                                kProduct, context);
                case BinOp::Div:
                    return wrap(print_e(*n.lhs, kProduct) + " / " + print_e(*n.rhs, kFactor),
                                kProduct, context);
                }
                return {};
            } else if constexpr (std::is_same_v<T, Pow>) {
                return wrap(print_e(*n.base, kBase) + "^" + std::to_string(n.exponent), kFactor,
                            context);
            } else {
                return "-" + print_e(*n.operand, kBase);
            }
        },
        e.node);
}

} // namespace

bool operator==(const IExpr& a, const IExpr& b)
{
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, ILit>)
                return x.value == y.value;
            else if constexpr (std::is_same_v<T, IVar>)
                return x.name == y.name;
            else if constexpr (std::is_same_v<T, IBinary>)
                return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, IExactDiv>)
                return x.divisor == y.divisor && same(x.operand, y.operand);
            else if constexpr (std::is_same_v<T, ICeil2>)
                return same(x.operand, y.operand);
            else
                return same(x.exponent, y.exponent);
        },
        a.node);
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLit>)
                return x.value == y.value;
            else if constexpr (std::is_same_v<T, QPow>)
                return x.k == y.k;
            else if constexpr (std::is_same_v<T, Poch>)
                return x.sign == y.sign && x.a == y.a && x.b == y.b;
            else if constexpr (std::is_same_v<T, GfRef>)
                return x.id == y.id;
            else if constexpr (std::is_same_v<T, Theta>)
                return x.domain == y.domain && x.var == y.var && same(x.weight, y.weight) &&
                       same(x.exponent, y.exponent);
            else if constexpr (std::is_same_v<T, Subst>)
                return x.k == y.k && x.sign == y.sign && same(x.operand, y.operand);
            else if constexpr (std::is_same_v<T, Binary>)
                return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, Pow>)
                return x.exponent == y.exponent && same(x.base, y.base);
            else
                return same(x.operand, y.operand);
        },
        a.node);
}

std::string print(const Expr& e) { return print_e(e, kSum); }
std::string print(const IExpr& e) { return print_i(e, kSum); }

} // namespace podium::qexpr
