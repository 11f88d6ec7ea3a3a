#include "wps/parse.hpp"

#include <cctype>

#include "wps/errors.hpp"

namespace wps {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    size_t pos = 0;        // 1-based column
    std::string text;      // Number: "p" or "p/q"; Var: "x3" / "t1"
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        Token t;
        t.pos = i_ + 1;
        if (i_ >= s_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = s_[i_];
        switch (c) {
            case '+': ++i_; t.kind = Tok::Plus; return t;
            case '-': ++i_; t.kind = Tok::Minus; return t;
            case '*': ++i_; t.kind = Tok::Star; return t;
            case '^': ++i_; t.kind = Tok::Caret; return t;
            case '(': ++i_; t.kind = Tok::LParen; return t;
            case ')': ++i_; t.kind = Tok::RParen; return t;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ < s_.size() && s_[i_] == '/') {
                size_t slash = i_;
                ++i_;
                if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                    throw input_error(err(slash + 1, "expected digits after '/' in a rational"));
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            }
            t.kind = Tok::Number;
            t.text = s_.substr(start, i_ - start);
            return t;
        }
        if (c == 'x' || c == 't') {
            size_t start = i_;
            ++i_;
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                throw input_error(err(start + 1, "variable name needs an index, e.g. x1 or t2"));
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            t.kind = Tok::Var;
            t.text = s_.substr(start, i_ - start);
            return t;
        }
        throw input_error(err(i_ + 1, std::string("unexpected character '") + c + "'"));
    }

    static std::string err(size_t pos, const std::string& msg) {
        return "column " + std::to_string(pos) + ": " + msg;
    }

  private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
  public:
    Parser(const std::string& text, int even_vars, int odd_vars)
        : lex_(text), even_vars_(even_vars), odd_vars_(odd_vars) {
        advance();
    }

    Poly parse() {
        Poly p = expr();
        expect(Tok::End, "trailing input");
        return p;
    }

  private:
    Lexer lex_;
    Token cur_;
    int even_vars_, odd_vars_;

    void advance() { cur_ = lex_.next(); }

    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) throw input_error(Lexer::err(cur_.pos, "expected " + what));
    }

    Poly expr() {
        bool negate = false;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            if (cur_.kind == Tok::Minus) negate = !negate;
            advance();
        }
        Poly acc = term();
        if (negate) acc = -acc;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            advance();
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (cur_.kind == Tok::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Token base = cur_;
        Poly p = atom();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Number || cur_.text.find('/') != std::string::npos)
                throw input_error(Lexer::err(cur_.pos, "expected a non-negative integer exponent"));
            long long e = 0;
            for (char c : cur_.text) {
                e = e * 10 + (c - '0');
                if (e > 1000000) throw input_error(Lexer::err(cur_.pos, "exponent too large"));
            }
            if (base.kind == Tok::Var && base.text[0] == 't' && e > 1)
                throw input_error(Lexer::err(base.pos, "odd variable squared: " + base.text + "^" +
                                                           std::to_string(e) + " would vanish"));
            advance();
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    Poly atom() {
        switch (cur_.kind) {
            case Tok::Number: {
                Rational c = Rational::from_string(cur_.text);
                advance();
                return Poly::constant(even_vars_, odd_vars_, c);
            }
            case Tok::Var: {
                char kind = cur_.text[0];
                long long idx = 0;
                for (size_t i = 1; i < cur_.text.size(); ++i) {
                    idx = idx * 10 + (cur_.text[i] - '0');
                    if (idx > kMaxOddVars + 1000) break;
                }
                Poly p(even_vars_, odd_vars_);
                if (kind == 'x') {
                    if (idx == 0) idx = 1; // x0 is an alias for x1
                    if (idx < 1 || idx > even_vars_)
                        throw input_error(Lexer::err(cur_.pos, "unknown variable " + cur_.text +
                                                                   " (ring has x1..x" +
                                                                   std::to_string(even_vars_) + ")"));
                    p = Poly::variable_even(even_vars_, odd_vars_, static_cast<int>(idx));
                } else {
                    if (idx < 1 || idx > odd_vars_)
                        throw input_error(Lexer::err(cur_.pos, "unknown variable " + cur_.text +
                                                                   " (ring has t1..t" +
                                                                   std::to_string(odd_vars_) + ")"));
                    p = Poly::variable_odd(even_vars_, odd_vars_, static_cast<int>(idx));
                }
                advance();
                return p;
            }
            case Tok::LParen: {
                advance();
                Poly p = expr();
                expect(Tok::RParen, "')'");
                advance();
                return p;
            }
            default:
                throw input_error(Lexer::err(cur_.pos, "expected a number, variable or '('"));
        }
    }
};

} // namespace

Poly parse_polynomial(const std::string& text, int even_vars, int odd_vars) {
    return Parser(text, even_vars, odd_vars).parse();
}

} // namespace wps
