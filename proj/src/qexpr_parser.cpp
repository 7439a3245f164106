#include "podium/qexpr.hpp"

#include <limits>

namespace podium::qexpr {

namespace {

template <class T>
ExprPtr make(T node)
{
    return std::make_shared<const Expr>(Expr{std::move(node)});
}

template <class T>
IExprPtr imake(T node)
{
    return std::make_shared<const IExpr>(IExpr{std::move(node)});
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    ExprPtr parse_all()
    {
        ExprPtr e = expr();
        if (peek().kind != TokenKind::End)
            fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }

    bool at(std::string_view text, std::size_t ahead = 0) const
    {
        const Token& t = peek(ahead);
        return (t.kind == TokenKind::Symbol || t.kind == TokenKind::Keyword) && t.text == text;
    }

    static std::string found(const Token& t)
    {
        return t.kind == TokenKind::End ? "end of input" : quoted(t.text);
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw SyntaxError(peek().offset, std::move(expected), found(peek()));
    }

    void expect(std::string_view text)
    {
        if (!at(text))
            fail({quoted(std::string(text))});
        ++pos_;
    }

    bool accept(std::string_view text)
    {
        if (!at(text))
            return false;
        ++pos_;
        return true;
    }

    std::uint64_t uint_literal(std::uint64_t min_value = 0)
    {
        const Token& t = peek();
        if (t.kind != TokenKind::Int)
            fail({"unsigned integer"});
        if (t.text.size() > 18)
            throw SyntaxError(t.offset, "integer " + t.text + " too large here");
        const std::uint64_t v = std::stoull(t.text);
        if (v < min_value)
            throw SyntaxError(t.offset, "integer must be at least " + std::to_string(min_value));
        ++pos_;
        return v;
    }

    // ("-")? "q" "^" UINT
    std::pair<Sign, Order> signed_qpow()
    {
        const Sign s = accept("-") ? Sign::Minus : Sign::Plus;
        expect("q");
        expect("^");
        return {s, uint_literal(1)};
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        while (at("+") || at("-")) {
            const BinOp op = peek().text == "+" ? BinOp::Add : BinOp::Sub;
            ++pos_;
            lhs = make(Binary{op, lhs, term()});
        }
        return lhs;
    }

    ExprPtr term()
    {
        ExprPtr lhs = factor();
        while (at("*") || at("/")) {
            const BinOp op = peek().text == "*" ? BinOp::Mul : BinOp::Div;
            ++pos_;
            lhs = make(Binary{op, lhs, factor()});
        }
        return lhs;
    }

    ExprPtr factor()
    {
        ExprPtr b = base();
        if (accept("^")) {
            const bool negative = accept("-");
            const std::uint64_t v = uint_literal();
            if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
                fail({"smaller exponent"});
            const auto e = static_cast<std::int64_t>(v);
            b = make(Pow{b, negative ? -e : e});
        }
        return b;
    }

    ExprPtr base()
    {
        const Token& t = peek();
        if (t.kind == TokenKind::Int) {
            ++pos_;
            return make(IntLit{BigInt(t.text)});
        }
        if (accept("q")) {
            expect("^");
            return make(QPow{uint_literal(1)});
        }
        if (accept("poch")) {
            expect("(");
            auto [s, a] = signed_qpow();
            expect(",");
            expect("q");
            expect("^");
            const Order b = uint_literal(1);
            expect(")");
            return make(Poch{s, a, b});
        }
        if (accept("gf")) {
            expect("(");
            const Token& n = peek();
            if (n.kind != TokenKind::Name)
                fail({"function name"});
            auto id = parse_function_id(n.text);
            if (!id)
                throw SyntaxError(n.offset, "unknown gf name " + quoted(n.text) +
                                                "; valid names: " + function_names());
            ++pos_;
            expect(")");
            return make(GfRef{*id});
        }
        if (accept("subst")) {
            expect("(");
            ExprPtr inner = expr();
            expect(",");
            auto [s, k] = signed_qpow();
            expect(")");
            return make(Subst{inner, k, s});
        }
        if (accept("theta"))
            return theta();
        if (accept("(")) {
            ExprPtr inner = expr();
            expect(")");
            return inner;
        }
        if (accept("-"))
            return make(Neg{base()});
        fail({"integer", "'q'", "'poch'", "'theta'", "'gf'", "'subst'", "'('", "'-'"});
    }

    ExprPtr theta()
    {
        expect("{");
        const Token& v = peek();
        if (v.kind != TokenKind::Name)
            fail({"summation variable"});
        var_ = v.text;
        ++pos_;
        expect("in");
        const Token& d = peek();
        Domain dom;
        if (d.kind == TokenKind::Name && d.text == "Z")
            dom = Domain::AllIntegers;
        else if (d.kind == TokenKind::Name && d.text == "N")
            dom = Domain::NonNegative;
        else
            fail({"'Z'", "'N'"});
        ++pos_;
        expect("}");
        expect("(");
        IExprPtr w = iexpr();
        expect(";");
        IExprPtr e = iexpr();
        expect(")");
        std::string name = std::move(var_);
        var_.clear();
        return make(Theta{dom, std::move(name), w, e});
    }

    IExprPtr iexpr()
    {
        IExprPtr lhs = iterm();
        while (at("+") || at("-")) {
            const IOp op = peek().text == "+" ? IOp::Add : IOp::Sub;
            ++pos_;
            lhs = imake(IBinary{op, lhs, iterm()});
        }
        return lhs;
    }

    IExprPtr iterm()
    {
        IExprPtr lhs = ifact();
        for (;;) {
            if (accept("*"))
                lhs = imake(IBinary{IOp::Mul, lhs, ifact()});
            else if (accept("div"))
                lhs = imake(IExactDiv{lhs, BigInt(static_cast<unsigned long>(uint_literal(1)))});
            else
                return lhs;
        }
    }

    bool at_alt_sign() const
    {
        return at("(") && at("-", 1) && peek(2).kind == TokenKind::Int && peek(2).text == "1" &&
               at(")", 3) && at("^", 4);
    }

    IExprPtr ifact()
    {
        const Token& t = peek();
        if (t.kind == TokenKind::Int) {
            ++pos_;
            return imake(ILit{BigInt(t.text)});
        }
        if (t.kind == TokenKind::Name) {
            if (t.text != var_)
                throw SyntaxError(t.offset, "unbound theta variable " + quoted(t.text) +
                                                " (summing over " + quoted(var_) + ")");
            ++pos_;
            return imake(IVar{t.text});
        }
        if (accept("ceil2")) {
            expect("(");
            IExprPtr inner = iexpr();
            expect(")");
            return imake(ICeil2{inner});
        }
        if (at_alt_sign()) {
            pos_ += 5;
            return imake(IAltSign{ifact()});
        }
        if (accept("(")) {
            IExprPtr inner = iexpr();
            expect(")");
            return inner;
        }
        fail({"integer", "summation variable", "'ceil2'", "'(-1)^'", "'('"});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::string var_;
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace podium::qexpr
