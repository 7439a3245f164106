#include "podium/qexpr.hpp"

namespace podium::qexpr {

BigInt eval_int(const IExpr& e, std::string_view var, const BigInt& value)
{
    return std::visit(
        [&](const auto& n) -> BigInt {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ILit>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, IVar>) {
                if (n.name != var)
                    throw EvalError("unbound theta variable '" + n.name + "'");
                return value;
            } else if constexpr (std::is_same_v<T, IBinary>) {
                BigInt a = eval_int(*n.lhs, var, value);
                BigInt b = eval_int(*n.rhs, var, value);
                switch (n.op) {
                case IOp::Add:
                    return a + b;
                case IOp::Sub:
                    return a - b;
                case IOp::Mul:
                    return a * b;
                }
                return {};
            } else if constexpr (std::is_same_v<T, IExactDiv>) {
                BigInt a = eval_int(*n.operand, var, value);
                if (!mpz_divisible_p(a.get_mpz_t(), n.divisor.get_mpz_t()))
                    throw EvalError("inexact div: " + a.get_str() + " is not divisible by " +
                                    n.divisor.get_str() + " at " + std::string(var) + " = " +
                                    value.get_str());
                BigInt q;
                mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), n.divisor.get_mpz_t());
                return q;
            } else if constexpr (std::is_same_v<T, ICeil2>) {
                BigInt a = eval_int(*n.operand, var, value);
                BigInt q;
                mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), 2);
                return q;
            } else {
                BigInt a = eval_int(*n.exponent, var, value);
                return mpz_odd_p(a.get_mpz_t()) ? -1 : 1;
            }
        },
        e.node);
}

Series eval(const Expr& e, Order order)
{
    return std::visit(
        [&](const auto& n) -> Series {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                return constant(n.value, order);
            } else if constexpr (std::is_same_v<T, QPow>) {
                return monomial(n.k, order);
            } else if constexpr (std::is_same_v<T, Poch>) {
                return pochhammer(n.sign, n.a, n.b, order);
            } else if constexpr (std::is_same_v<T, GfRef>) {
                return gf_series(n.id, order);
            } else if constexpr (std::is_same_v<T, Theta>) {
                const IExprPtr w = n.weight;
                const IExprPtr x = n.exponent;
                const std::string var = n.var;
                return theta_series(
                    n.domain,
                    [&](std::int64_t i) { return eval_int(*w, var, BigInt(static_cast<long>(i))); },
                    [&](std::int64_t i) { return eval_int(*x, var, BigInt(static_cast<long>(i))); },
                    order);
            } else if constexpr (std::is_same_v<T, Subst>) {
                // Only coefficients up to order / k of the operand are needed.
                return substitute(eval(*n.operand, order / n.k), n.k, n.sign, order);
            } else if constexpr (std::is_same_v<T, Binary>) {
                Series a = eval(*n.lhs, order);
                Series b = eval(*n.rhs, order);
                switch (n.op) {
                case BinOp::Add:
                    return add(a, b);
                case BinOp::Sub:
                    return sub(a, b);
                case BinOp::Mul:
                    return mul(a, b);
                case BinOp::Div:
                    return mul(a, inverse(b));
                }
                throw std::logic_error("unhandled operator");
            } else if constexpr (std::is_same_v<T, Pow>) {
                return power(eval(*n.base, order), n.exponent);
            } else {
                return negate(eval(*n.operand, order));
            }
        },
        e.node);
}

std::optional<Mismatch> check(const Expr& lhs, const Expr& rhs, Order order,
                              std::optional<BigInt> modulus)
{
    Series a = eval(lhs, order);
    Series b = eval(rhs, order);
    if (modulus) {
        a = reduce_mod(a, *modulus);
        b = reduce_mod(b, *modulus);
    }
    return equal_upto(a, b, order);
}

} // namespace podium::qexpr
