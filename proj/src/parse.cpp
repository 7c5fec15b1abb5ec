#include "cuboid/parse.hpp"

#include <cctype>
#include <optional>

namespace cuboid {

ParseError::ParseError(std::string message, int line, int column, std::string token)
    : std::runtime_error(message + " at " + std::to_string(line) + ":" + std::to_string(column) +
                         (token.empty() ? "" : " near '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

const Polynomial* DefinitionSet::find(std::string_view name) const {
    for (const auto& [n, p] : entries)
        if (n == name) return &p;
    return nullptr;
}

namespace {

enum class TokKind { ident, uint, assign, plus, minus, star, caret, slash, lparen, rparen, semi, end };

struct Token {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws_and_comments();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {TokKind::end, "", line, col};
        const char c = text_[pos_];
        if (c == '~' || std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            advance();
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                advance();
            return {TokKind::ident, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                advance();
            return {TokKind::uint, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                advance();
                advance();
                return {TokKind::assign, ":=", line, col};
            }
            throw ParseError("stray ':'", line, col, ":");
        }
        advance();
        switch (c) {
            case '+': return {TokKind::plus, "+", line, col};
            case '-': return {TokKind::minus, "-", line, col};
            case '*': return {TokKind::star, "*", line, col};
            case '^': return {TokKind::caret, "^", line, col};
            case '/': return {TokKind::slash, "/", line, col};
            case '(': return {TokKind::lparen, "(", line, col};
            case ')': return {TokKind::rparen, ")", line, col};
            case ';': return {TokKind::semi, ";", line, col};
        }
        throw ParseError("unexpected character", line, col, std::string(1, c));
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, RingPtr ring) : lexer_(text), ring_(std::move(ring)) {
        cur_ = lexer_.next();
    }

    DefinitionSet definitions(std::string source_note) {
        DefinitionSet set;
        set.source = std::move(source_note);
        while (cur_.kind != TokKind::end) {
            Token name = expect(TokKind::ident, "definition name");
            expect(TokKind::assign, "':='");
            Polynomial p = expression();
            if (cur_.kind == TokKind::end)
                throw ParseError("unterminated definition of '" + name.text + "', expected ';'",
                                 cur_.line, cur_.column, cur_.text);
            expect(TokKind::semi, "';'");
            for (const auto& [n, q] : set.entries)
                if (n == name.text)
                    throw ParseError("duplicate definition '" + name.text + "'", name.line,
                                     name.column, name.text);
            set.entries.emplace_back(std::move(name.text), std::move(p));
        }
        return set;
    }

    Polynomial single_expression() {
        Polynomial p = expression();
        if (cur_.kind != TokKind::end)
            throw ParseError("trailing input after expression", cur_.line, cur_.column, cur_.text);
        return p;
    }

private:
    Token expect(TokKind kind, const char* what) {
        if (cur_.kind != kind)
            throw ParseError(std::string("expected ") + what, cur_.line, cur_.column, cur_.text);
        Token t = cur_;
        cur_ = lexer_.next();
        return t;
    }

    bool accept(TokKind kind) {
        if (cur_.kind != kind) return false;
        cur_ = lexer_.next();
        return true;
    }

    Polynomial expression() {
        Polynomial p = term();
        for (;;) {
            if (accept(TokKind::plus)) {
                p = p + term();
            } else if (accept(TokKind::minus)) {
                p = p - term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        const bool negated = accept(TokKind::minus);
        Polynomial p = factor();
        while (accept(TokKind::star)) p = p * factor();
        return negated ? -p : p;
    }

    Polynomial factor() {
        if (accept(TokKind::lparen)) {
            Polynomial p = expression();
            expect(TokKind::rparen, "')'");
            return p;
        }
        if (cur_.kind == TokKind::ident) {
            Token name = cur_;
            cur_ = lexer_.next();
            if (!ring_->index_of(name.text))
                throw ParseError("unknown variable '" + name.text + "' in ring " + ring_->name(),
                                 name.line, name.column, name.text);
            std::uint32_t exp = 1;
            if (accept(TokKind::caret)) {
                Token e = cur_;
                if (e.kind != TokKind::uint)
                    throw ParseError("malformed exponent", e.line, e.column, e.text);
                cur_ = lexer_.next();
                exp = parse_uint(e);
            }
            return Polynomial::variable(ring_, name.text, exp);
        }
        if (cur_.kind == TokKind::uint) {
            Token num = cur_;
            cur_ = lexer_.next();
            Rational value{Integer(num.text)};
            if (accept(TokKind::slash)) {
                Token den = cur_;
                if (den.kind != TokKind::uint)
                    throw ParseError("malformed denominator", den.line, den.column, den.text);
                cur_ = lexer_.next();
                Integer d(den.text);
                if (d == 0)
                    throw ParseError("zero denominator", den.line, den.column, den.text);
                value /= Rational(d);
            }
            return Polynomial::constant(ring_, value);
        }
        throw ParseError("expected variable, number, or '('", cur_.line, cur_.column, cur_.text);
    }

    std::uint32_t parse_uint(const Token& t) {
        Integer v(t.text);
        if (v > 1000000) throw ParseError("exponent too large", t.line, t.column, t.text);
        return static_cast<std::uint32_t>(v);
    }

    Lexer lexer_;
    RingPtr ring_;
    Token cur_;
};

}  // namespace

DefinitionSet parse_definitions(std::string_view text, const RingPtr& ring,
                                std::string source_note) {
    Parser parser(text, ring);
    return parser.definitions(std::move(source_note));
}

Polynomial parse_expression(std::string_view text, const RingPtr& ring) {
    Parser parser(text, ring);
    return parser.single_expression();
}

std::string render(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& vars = p.ring()->variables();
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (negative)
            out += '-';
        else if (!first)
            out += '+';
        first = false;

        const Rational mag = negative ? Rational(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += '*';
            mono += vars[i];
            if (m[i] > 1) {
                mono += '^';
                mono += std::to_string(m[i]);
            }
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag);
            out += '*';
            out += mono;
        }
    }
    return out;
}

}  // namespace cuboid
