#include "qeuler/parser.hpp"

#include <cctype>

#include "qeuler/errors.hpp"

namespace qeuler {
namespace {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t pos;
    Rational value;     // number
    std::string text;   // ident
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) return {Tok::end, start, {}, {}};
        char ch = src_[i_];
        switch (ch) {
            case '+': ++i_; return {Tok::plus, start, {}, {}};
            case '-': ++i_; return {Tok::minus, start, {}, {}};
            case '*': ++i_; return {Tok::star, start, {}, {}};
            case '^': ++i_; return {Tok::caret, start, {}, {}};
            case '(': ++i_; return {Tok::lparen, start, {}, {}};
            case ')': ++i_; return {Tok::rparen, start, {}, {}};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            Token t{Tok::ident, start, {}, src_.substr(i_, j - i_)};
            i_ = j;
            return t;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }

private:
    Token lex_number(std::size_t start) {
        std::size_t j = i_;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        std::string text = src_.substr(i_, j - i_);
        // A '/' directly followed by digits continues the rational literal.
        if (j < src_.size() && src_[j] == '/') {
            std::size_t k = j + 1;
            std::size_t den_start = k;
            while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
            if (k == den_start) throw ParseError("expected digits after '/'", den_start);
            text += src_.substr(j, k - j);
            j = k;
        }
        i_ = j;
        return {Tok::number, start, Rational::from_string(text), {}};
    }

    const std::string& src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& src, const VarSetPtr& vars)
        : lexer_(src), vars_(vars), cur_(lexer_.next()) {}

    MPoly<Rational> parse() {
        MPoly<Rational> p = expr();
        if (cur_.kind != Tok::end) throw ParseError("unexpected trailing input", cur_.pos);
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    MPoly<Rational> expr() {
        MPoly<Rational> acc = term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            bool minus = cur_.kind == Tok::minus;
            advance();
            MPoly<Rational> rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    MPoly<Rational> term() {
        MPoly<Rational> acc = unary();
        while (cur_.kind == Tok::star) {
            advance();
            acc *= unary();
        }
        // Implicit multiplication (e.g. "2x" or "x y") is rejected here.
        if (cur_.kind == Tok::number || cur_.kind == Tok::ident || cur_.kind == Tok::lparen)
            throw ParseError("missing operator before this factor", cur_.pos);
        return acc;
    }

    MPoly<Rational> unary() {
        if (cur_.kind == Tok::minus) {
            advance();
            return -unary();
        }
        if (cur_.kind == Tok::plus) {
            advance();
            return unary();
        }
        return factor();
    }

    MPoly<Rational> factor() {
        MPoly<Rational> base = primary();
        if (cur_.kind == Tok::caret) {
            advance();
            if (cur_.kind != Tok::number)
                throw ParseError("expected integer exponent after '^'", cur_.pos);
            if (!cur_.value.is_integer() || cur_.value.sign() < 0)
                throw ParseError("exponent must be a nonnegative integer", cur_.pos);
            long e = cur_.value.to_long();
            advance();
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    MPoly<Rational> primary() {
        switch (cur_.kind) {
            case Tok::number: {
                MPoly<Rational> p = MPoly<Rational>::constant(vars_, cur_.value);
                advance();
                return p;
            }
            case Tok::ident: {
                auto idx = vars_->index_of(cur_.text);
                if (!idx)
                    throw ParseError("undeclared identifier '" + cur_.text + "'", cur_.pos);
                MPoly<Rational> p = MPoly<Rational>::variable(vars_, *idx);
                advance();
                return p;
            }
            case Tok::lparen: {
                advance();
                MPoly<Rational> p = expr();
                if (cur_.kind != Tok::rparen) throw ParseError("expected ')'", cur_.pos);
                advance();
                return p;
            }
            default:
                throw ParseError("expected a number, variable, or '('", cur_.pos);
        }
    }

    Lexer lexer_;
    const VarSetPtr& vars_;
    Token cur_;
};

}  // namespace

MPoly<Rational> parse_poly(const std::string& text, const VarSetPtr& vars) {
    return Parser(text, vars).parse();
}

}  // namespace qeuler
