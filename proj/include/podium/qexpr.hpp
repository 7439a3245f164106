#pragma once

// A small text language for q-series so identities can be written as data.
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" sint)?
//   base   := INT | "q" "^" UINT | poch | theta | gfref | subst | "(" expr ")" | "-" base
//   poch   := "poch" "(" ("-")? "q" "^" UINT "," "q" "^" UINT ")"
//   gfref  := "gf" "(" NAME ")"
//   subst  := "subst" "(" expr "," ("-")? "q" "^" UINT ")"
//   theta  := "theta" "{" NAME "in" ("Z"|"N") "}" "(" iexpr ";" iexpr ")"
//   iexpr  := iterm (("+"|"-") iterm)*
//   iterm  := ifact ("*" ifact | "div" UINT)*
//   ifact  := INT | NAME | "ceil2" "(" iexpr ")" | "(-1)" "^" ifact | "(" iexpr ")"
//
// "^" binds tightest, unary minus binds tighter than "*", and "/" divides by
// a series with unit constant term.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "podium/partitions.hpp"
#include "podium/series.hpp"
#include "podium/theta.hpp"

namespace podium::qexpr {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);
    SyntaxError(std::size_t offset, const std::string& message);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Evaluation failures that are not series-algebra errors, e.g. inexact "div".
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TokenKind { Int, Name, Keyword, Symbol, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> lex(std::string_view text);

// Integer expressions over the theta summation variable.

struct IExpr;
using IExprPtr = std::shared_ptr<const IExpr>;

enum class IOp { Add, Sub, Mul };

struct ILit { BigInt value; };
struct IVar { std::string name; };
struct IBinary { IOp op; IExprPtr lhs, rhs; };
struct IExactDiv { IExprPtr operand; BigInt divisor; };
struct ICeil2 { IExprPtr operand; };
struct IAltSign { IExprPtr exponent; }; // (-1)^exponent

struct IExpr {
    std::variant<ILit, IVar, IBinary, IExactDiv, ICeil2, IAltSign> node;
};

// Series expressions.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { Add, Sub, Mul, Div };

struct IntLit { BigInt value; };
struct QPow { Order k; };
struct Poch { Sign sign; Order a, b; };
struct GfRef { FunctionId id; };
struct Theta { Domain domain; std::string var; IExprPtr weight, exponent; };
struct Subst { ExprPtr operand; Order k; Sign sign; };
struct Binary { BinOp op; ExprPtr lhs, rhs; };
struct Pow { ExprPtr base; std::int64_t exponent; };
struct Neg { ExprPtr operand; };

struct Expr {
    std::variant<IntLit, QPow, Poch, GfRef, Theta, Subst, Binary, Pow, Neg> node;
};

/// Structural equality of trees.
bool operator==(const IExpr& a, const IExpr& b);
bool operator==(const Expr& a, const Expr& b);

/// Throws SyntaxError carrying the byte offset and the expected tokens.
ExprPtr parse(std::string_view text);

/// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);
std::string print(const IExpr& e);

BigInt eval_int(const IExpr& e, std::string_view var, const BigInt& value);
Series eval(const Expr& e, Order order);

/// Evaluates both sides at order, optionally reduces modulo `modulus`, and
/// returns the first differing coefficient if any.
std::optional<Mismatch> check(const Expr& lhs, const Expr& rhs, Order order,
                              std::optional<BigInt> modulus = std::nullopt);

} // namespace podium::qexpr
