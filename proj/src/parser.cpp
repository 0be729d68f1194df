#include "saito/parser.hpp"

#include <cctype>

namespace saito {

namespace {

struct Token {
    enum Kind { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        current_.line = line_;
        current_.column = col_;
        if (pos_ >= src_.size()) {
            current_.kind = Token::End;
            current_.text = "<end>";
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                bump();
            }
            current_.kind = Token::Integer;
            current_.text = num;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                bump();
            }
            current_.kind = Token::Ident;
            current_.text = id;
            return;
        }
        switch (c) {
            case '+': current_.kind = Token::Plus; break;
            case '-': current_.kind = Token::Minus; break;
            case '*': current_.kind = Token::Star; break;
            case '^': current_.kind = Token::Caret; break;
            case '/': current_.kind = Token::Slash; break;
            case '(': current_.kind = Token::LParen; break;
            case ')': current_.kind = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        current_.text = std::string(1, c);
        bump();
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
};

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars) : lex_(src), vars_(vars) {}

    Poly parse() {
        Poly p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) throw ParseError("unexpected token '" + t.text + "'", t.line, t.column);
        return p;
    }

private:
    Lexer lex_;
    const std::vector<std::string>& vars_;

    Poly expr() {
        Poly p = term();
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.take();
            Poly rhs = term();
            p = (op.kind == Token::Plus) ? p + rhs : p - rhs;
        }
        return p;
    }

    Poly term() {
        Poly p = unary();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            p = p * unary();
        }
        return p;
    }

    Poly unary() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return -unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Integer)
                throw ParseError("exponent must be a non-negative integer literal", e.line, e.column);
            (void)caret;
            return base.pow(std::stoi(e.text));
        }
        return base;
    }

    Poly primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Integer: {
                Int num(t.text);
                if (lex_.peek().kind == Token::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Token::Integer)
                        throw ParseError("expected integer denominator", d.line, d.column);
                    Int den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.line, d.column);
                    return Poly::constant(vars_, Rat(num) / Rat(den));
                }
                return Poly::constant(vars_, Rat(num));
            }
            case Token::Ident: {
                for (const auto& v : vars_)
                    if (v == t.text) return Poly::variable(vars_, t.text);
                throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
            }
            case Token::LParen: {
                Poly p = expr();
                Token close = lex_.take();
                if (close.kind != Token::RParen)
                    throw ParseError("expected ')'", close.line, close.column);
                return p;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", t.line, t.column);
        }
    }
};

}  // namespace

Poly parse_poly(const std::string& source, const std::vector<std::string>& variables) {
    return Parser(source, variables).parse();
}

RatFn parse_ratfn(const std::string& source, const std::vector<std::string>& variables) {
    if (!source.empty() && source.front() == '(' && source.back() == ')') {
        size_t sep = source.find(")/(");
        if (sep != std::string::npos) {
            Poly num = parse_poly(source.substr(1, sep - 1), variables);
            Poly den = parse_poly(source.substr(sep + 3, source.size() - sep - 4), variables);
            return RatFn(std::move(num), std::move(den));
        }
    }
    return RatFn(parse_poly(source, variables));
}

}  // namespace saito
