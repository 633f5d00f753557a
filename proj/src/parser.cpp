#include "rdim/parser.hpp"

#include <cctype>

#include "rdim/errors.hpp"

namespace rdim {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take()
    {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
        size_t start = i_;
        if (i_ == s_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                ++j;
            tok_ = {Token::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
        case '+': tok_ = {Token::Plus, "+", start}; return;
        case '-': tok_ = {Token::Minus, "-", start}; return;
        case '*': tok_ = {Token::Star, "*", start}; return;
        case '^': tok_ = {Token::Caret, "^", start}; return;
        case '(': tok_ = {Token::LParen, "(", start}; return;
        case ')': tok_ = {Token::RParen, ")", start}; return;
        case '/': tok_ = {Token::Slash, "/", start}; return;
        default:
            throw InputError("parse.char",
                             "unexpected character '" + std::string(1, c) + "' at position " +
                                 std::to_string(start));
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : lex_(text), ring_(std::move(ring)) {}

    Polynomial run()
    {
        Polynomial p = expr();
        if (lex_.peek().kind != Token::End)
            fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what)
    {
        throw InputError("parse.syntax",
                         what + " at position " + std::to_string(lex_.peek().pos));
    }

    Polynomial expr()
    {
        bool negate = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * factor();
        }
        // adjacent factors without '*' (e.g. "2x" or "x y") are not allowed
        if (lex_.peek().kind == Token::Number || lex_.peek().kind == Token::Ident ||
            lex_.peek().kind == Token::LParen)
            fail("implicit multiplication is not allowed");
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            if (lex_.peek().kind != Token::Number)
                fail("exponent must be a non-negative integer");
            unsigned long e = std::stoul(lex_.take().text);
            base = base.pow(static_cast<uint32_t>(e));
        }
        return base;
    }

    Polynomial atom()
    {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Number: {
            if (lex_.peek().kind == Token::Slash) {
                lex_.take();
                if (lex_.peek().kind != Token::Number)
                    fail("expected denominator");
                Token d = lex_.take();
                if (d.text == "0")
                    throw InputError("parse.zero_denominator", "rational literal with zero denominator");
                Rational q(t.text + "/" + d.text);
                q.canonicalize();
                return Polynomial::constant(ring_, q);
            }
            return Polynomial::constant(ring_, Rational(t.text));
        }
        case Token::Ident: {
            auto idx = ring_->index_of(t.text);
            if (!idx)
                throw InputError("parse.unknown_variable",
                                 "unknown variable '" + t.text + "'");
            return Polynomial::variable(ring_, *idx);
        }
        case Token::LParen: {
            Polynomial p = expr();
            if (lex_.peek().kind != Token::RParen)
                fail("expected ')'");
            lex_.take();
            return p;
        }
        default:
            fail("expected number, variable or '('");
        }
    }

    Lexer lex_;
    RingPtr ring_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring)
{
    return Parser(text, ring).run();
}

} // namespace rdim
