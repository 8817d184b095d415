// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gheights/errors.hpp"

namespace gh {
namespace {

enum class TokKind { number, identifier, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            tok_ = Token{TokKind::end, "", start};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            tok_ = Token{TokKind::number, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = Token{TokKind::identifier, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': tok_ = Token{TokKind::plus, "+", start}; return;
        case '-': tok_ = Token{TokKind::minus, "-", start}; return;
        case '*': tok_ = Token{TokKind::star, "*", start}; return;
        case '^': tok_ = Token{TokKind::caret, "^", start}; return;
        case '/': tok_ = Token{TokKind::slash, "/", start}; return;
        case '(': tok_ = Token{TokKind::lparen, "(", start}; return;
        case ')': tok_ = Token{TokKind::rparen, ")", start}; return;
        default:
            throw SyntaxError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_{TokKind::end, "", 0};
};

class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), lex_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::end)
            throw SyntaxError("unexpected trailing input '" + t.text + "'", t.pos);
        return p;
    }

private:
    Polynomial expr() {
        bool negate_first = false;
        if (lex_.peek().kind == TokKind::minus) {
            // A minus directly before a number literal belongs to the
            // literal (so "-3^2" squares -3); otherwise it negates the
            // whole first term.
            Lexer probe = lex_;
            probe.take();
            if (probe.peek().kind != TokKind::number) {
                lex_.take();
                negate_first = true;
            }
        }
        Polynomial acc = term();
        if (negate_first) acc = acc.neg();
        while (true) {
            TokKind k = lex_.peek().kind;
            if (k == TokKind::plus) {
                lex_.take();
                acc = acc.add(term());
            } else if (k == TokKind::minus) {
                lex_.take();
                acc = acc.sub(term());
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == TokKind::star) {
            lex_.take();
            acc = acc.mul(factor());
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.peek().kind == TokKind::caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != TokKind::number)
                throw SyntaxError("expected a nonnegative integer exponent", e.pos);
            b = b.pow(parse_u32(e));
        }
        return b;
    }

    Polynomial base() {
        Token t = lex_.take();
        switch (t.kind) {
        case TokKind::minus: {
            Token n = lex_.take();
            if (n.kind != TokKind::number)
                throw SyntaxError("expected a number after '-'", n.pos);
            return rational(n, true);
        }
        case TokKind::number:
            return rational(t, false);
        case TokKind::identifier: {
            auto idx = ring_->var_index(t.text);
            if (!idx) throw UnknownVariableError("unknown variable '" + t.text + "'");
            return Polynomial::variable(ring_, *idx);
        }
        case TokKind::lparen: {
            Polynomial p = expr();
            Token close = lex_.take();
            if (close.kind != TokKind::rparen)
                throw SyntaxError("expected ')'", close.pos);
            return p;
        }
        case TokKind::end:
            throw SyntaxError("unexpected end of input", t.pos);
        default:
            throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        }
    }

    Polynomial rational(const Token& num, bool negative) {
        std::string den = "1";
        if (lex_.peek().kind == TokKind::slash) {
            lex_.take();
            Token d = lex_.take();
            if (d.kind != TokKind::number)
                throw SyntaxError("expected an integer denominator", d.pos);
            if (d.text.find_first_not_of('0') == std::string::npos)
                throw SyntaxError("zero denominator", d.pos);
            den = d.text;
        }
        return Polynomial::constant(ring_, ring_->field().from_fraction(negative, num.text, den));
    }

    std::uint32_t parse_u32(const Token& t) {
        std::uint64_t v = 0;
        for (char c : t.text) {
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw SyntaxError("exponent too large", t.pos);
        }
        return static_cast<std::uint32_t>(v);
    }

    RingPtr ring_;
    Lexer lex_;
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    return Parser(ring, text).run();
}

} // namespace gh
