#include <gtest/gtest.h>

#include <random>

#include "podium/identity_suite.hpp"
#include "podium/qexpr.hpp"

using namespace podium;
using namespace podium::qexpr;

namespace {

ExprPtr node(auto n) { return std::make_shared<const Expr>(Expr{std::move(n)}); }
IExprPtr inode(auto n) { return std::make_shared<const IExpr>(IExpr{std::move(n)}); }

Series ev(std::string_view text, Order n) { return eval(*parse(text), n); }

SyntaxError syntax_error(std::string_view text)
{
    try {
        parse(text);
    } catch (const SyntaxError& e) {
        return e;
    }
    ADD_FAILURE() << "no syntax error for " << text;
    return SyntaxError(0, "none");
}

bool mentions(const SyntaxError& e, std::string_view token)
{
    for (const auto& x : e.expected())
        if (x == token)
            return true;
    return false;
}

// Random trees for the print/parse round trip.
class TreeGen {
public:
    explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

    ExprPtr expr(int depth)
    {
        int pick = depth <= 0 ? roll(4) : roll(10);
        switch (pick) {
        case 0: return node(IntLit{BigInt(roll(20))});
        case 1: return node(QPow{Order(1 + roll(5))});
        case 2: return node(Poch{roll(2) ? Sign::Plus : Sign::Minus, Order(1 + roll(4)), Order(1 + roll(4))});
        case 3: return node(GfRef{kAllFunctions[roll(16)]});
        case 4: return node(Neg{expr(depth - 1)});
        case 5: return node(Pow{expr(depth - 1), std::int64_t(roll(7)) - 3});
        case 6: return node(Subst{expr(depth - 1), Order(1 + roll(3)), roll(2) ? Sign::Plus : Sign::Minus});
        case 7: return node(Theta{roll(2) ? Domain::AllIntegers : Domain::NonNegative, "n",
                                  iexpr(2), iexpr(2)});
        default:
            return node(Binary{static_cast<BinOp>(roll(4)), expr(depth - 1), expr(depth - 1)});
        }
    }

    IExprPtr iexpr(int depth)
    {
        int pick = depth <= 0 ? roll(2) : roll(7);
        switch (pick) {
        case 0: return inode(ILit{BigInt(roll(9))});
        case 1: return inode(IVar{"n"});
        case 2: return inode(IExactDiv{iexpr(depth - 1), BigInt(1 + roll(4))});
        case 3: return inode(ICeil2{iexpr(depth - 1)});
        case 4: return inode(IAltSign{iexpr(depth - 1)});
        default:
            return inode(IBinary{static_cast<IOp>(roll(3)), iexpr(depth - 1), iexpr(depth - 1)});
        }
    }

private:
    int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    std::mt19937_64 rng_;
};

} // namespace

TEST(Lexer, TokensAndOffsets)
{
    auto toks = lex("poch(-q^1, q^2)");
    ASSERT_EQ(toks.size(), 12u);
    EXPECT_EQ(toks[0].kind, TokenKind::Keyword);
    EXPECT_EQ(toks[0].text, "poch");
    EXPECT_EQ(toks[2].text, "-");
    EXPECT_EQ(toks[2].offset, 5u);
    EXPECT_EQ(toks[5].kind, TokenKind::Int);
    EXPECT_EQ(toks.back().kind, TokenKind::End);
    EXPECT_EQ(toks.back().offset, 15u);
}

TEST(Lexer, RejectsUnknownCharacter)
{
    try {
        lex("q^1 @ 2");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
}

TEST(Parser, PochQuotient)
{
    auto e = parse("poch(-q^1, q^2) / poch(q^2, q^2)");
    auto expect = node(Binary{BinOp::Div, node(Poch{Sign::Minus, 1, 2}), node(Poch{Sign::Plus, 2, 2})});
    EXPECT_TRUE(*e == *expect);
    EXPECT_FALSE(*e == *node(Poch{Sign::Minus, 1, 2}));
}

TEST(Parser, Precedence)
{
    auto e = parse("1 + 2*q^3");
    auto expect = node(Binary{BinOp::Add, node(IntLit{1}),
                              node(Binary{BinOp::Mul, node(IntLit{2}), node(QPow{3})})});
    EXPECT_TRUE(*e == *expect);

    // "-" applies to the base before "^"
    auto neg = parse("-(1 + q^1)^2");
    ASSERT_TRUE(std::holds_alternative<Pow>(neg->node));
    EXPECT_EQ(ev("-(1 + q^1)^2", 3), from_ints({1, 2, 1, 0}));
    EXPECT_EQ(ev("0 - (1 + q^1)^2", 3), from_ints({-1, -2, -1, 0}));

    // left associativity
    EXPECT_EQ(ev("10 - 3 - 2", 0), from_ints({5}));
    EXPECT_EQ(ev("q^1 / (1 - q^1) / (1 - q^1)", 4), from_ints({0, 1, 2, 3, 4}));
}

TEST(Parser, ThetaWeightSyntax)
{
    auto e = parse("theta{n in Z}((-1)^(n); (n*(3*n + 1)) div 2)");
    ASSERT_TRUE(std::holds_alternative<Theta>(e->node));
    const auto& t = std::get<Theta>(e->node);
    EXPECT_EQ(t.domain, Domain::AllIntegers);
    EXPECT_EQ(t.var, "n");
    for (std::int64_t n = -5; n <= 5; ++n) {
        EXPECT_EQ(eval_int(*t.weight, "n", n), eval_weight(WeightKind::AltN, n));
        EXPECT_EQ(eval_int(*t.exponent, "n", n), BigInt(n * (3 * n + 1) / 2));
    }
}

TEST(Parser, AltSignWithoutParens)
{
    EXPECT_EQ(ev("theta{n in Z}((-1)^n; n*n)", 9), ev("theta{n in Z}((-1)^(n); n*n)", 9));
}

TEST(Parser, UnclosedGfReportsOffset)
{
    auto e = syntax_error("gf(pod");
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_TRUE(mentions(e, "')'"));
}

TEST(Parser, UnknownGfName)
{
    auto e = syntax_error("gf(podd)");
    EXPECT_EQ(e.offset(), 3u);
    EXPECT_NE(std::string(e.what()).find("pod"), std::string::npos);
}

TEST(Parser, UnboundVariable)
{
    auto e = syntax_error("theta{n in Z}(1; m*m)");
    EXPECT_EQ(e.offset(), 17u);
}

TEST(Parser, RejectsZeroExponentsAndDivisors)
{
    EXPECT_THROW(parse("q^0"), SyntaxError);
    EXPECT_THROW(parse("poch(q^0, q^1)"), SyntaxError);
    EXPECT_THROW(parse("theta{n in N}(1; n div 0)"), SyntaxError);
}

TEST(Parser, Malformed)
{
    for (auto text : {"", "1 +", "(1", "1 2", "poch(q^1 q^1)", "theta{n in R}(1; n)",
                      "subst(gf(p), q)", "q", "q^-1", "gf()", "1 ^ ^ 2"})
        EXPECT_THROW(parse(text), SyntaxError) << text;
    auto e = syntax_error("1 2");
    EXPECT_EQ(e.offset(), 2u);
}

TEST(Eval, Examples)
{
    EXPECT_EQ(ev("gf(pod)", 8), from_ints({1, 1, 1, 2, 3, 4, 5, 7, 10}));
    EXPECT_EQ(ev("1 - q^1", 4), from_ints({1, -1, 0, 0, 0}));
    EXPECT_EQ(ev("poch(q^1, q^1)", 7), from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(ev("gf(pod) * subst(poch(q^1, q^1), q^2)", 8), from_ints({1, 1, 0, 1, 1, 1, 1, 1, 2}));
    EXPECT_EQ(ev("(1 + q^1)^-2", 4), from_ints({1, -2, 3, -4, 5}));
    EXPECT_EQ(ev("q^9", 4), constant(0, 4));
    EXPECT_EQ(ev("subst(1 + q^1, -q^3)", 7), from_ints({1, 0, 0, -1, 0, 0, 0, 0}));
}

TEST(Eval, Errors)
{
    EXPECT_THROW(ev("theta{n in N}(1; n div 2)", 5), EvalError);
    EXPECT_THROW(ev("1 / (2 + q^1)", 5), InvertibilityError);
    EXPECT_THROW(ev("(2 + q^1)^-1", 5), InvertibilityError);
    EXPECT_THROW(ev("theta{n in Z}(1; 7)", 5), DivergenceError);
}

TEST(Eval, IntegerOperators)
{
    auto e = parse("theta{n in N}(ceil2(n - 3); n)");
    const auto& t = std::get<Theta>(e->node);
    EXPECT_EQ(eval_int(*t.weight, "n", 0), -1);
    EXPECT_EQ(eval_int(*t.weight, "n", 6), 2);
    EXPECT_EQ(ev("theta{n in N}(ceil2(n); n)", 5), from_ints({0, 1, 1, 2, 2, 3}));
}

TEST(Check, MatchMismatchAndModulus)
{
    auto pod = parse("gf(pod)");
    auto cubic = parse("gf(cubic)");
    EXPECT_FALSE(check(*pod, *parse("poch(-q^1, q^2) / poch(q^2, q^2)"), 100).has_value());
    EXPECT_FALSE(check(*pod, *cubic, 100, BigInt(2)).has_value());
    EXPECT_TRUE(check(*pod, *cubic, 100).has_value());

    auto m = check(*pod, *parse("gf(p)"), 10);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->index, 2u);
    EXPECT_EQ(m->lhs, 1);
    EXPECT_EQ(m->rhs, 2);
}

TEST(Printer, Canonical)
{
    EXPECT_EQ(print(*parse("poch(-q^1,q^2)/poch(q^2,q^2)")), "poch(-q^1, q^2) / poch(q^2, q^2)");
    EXPECT_EQ(print(*parse("(q^2)^3")), "(q^2)^3");
    EXPECT_EQ(print(*parse("1-(2-3)")), "1 - (2 - 3)");
}

TEST(Printer, ManifestRoundTrip)
{
    for (const auto& r : bundled_manifest()) {
        for (const auto* side : {&r.lhs, &r.rhs}) {
            auto e = parse(*side);
            auto text = print(*e);
            auto again = parse(text);
            EXPECT_TRUE(*e == *again) << r.id << ": " << text;
            EXPECT_EQ(print(*again), text);
        }
    }
}

TEST(Printer, RandomTreeRoundTrip)
{
    TreeGen gen(77);
    for (int t = 0; t < 1000; ++t) {
        auto e = gen.expr(4);
        auto text = print(*e);
        ExprPtr back;
        ASSERT_NO_THROW(back = parse(text)) << text;
        ASSERT_TRUE(*e == *back) << text;
    }
}

TEST(Eval, OrderMonotone)
{
    // evaluating higher and truncating agrees with evaluating lower
    for (const auto& r : bundled_manifest()) {
        auto e = parse(r.lhs);
        auto high = eval(*e, 64);
        for (Order m : {0u, 1u, 7u, 30u})
            EXPECT_EQ(truncate(high, m), eval(*e, m)) << r.id << " at " << m;
    }
}
