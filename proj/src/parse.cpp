#include "uniprod/parse.hpp"

#include <cctype>

#include "uniprod/errors.hpp"

namespace uniprod {

namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& text) : text_(text) {}

    std::size_t column() const { return pos_ + 1; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    std::string lower_run() {
        std::string out;
        while (!done() && peek() >= 'a' && peek() <= 'z') {
            out += peek();
            advance();
        }
        return out;
    }

    std::string digit_run() {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out += peek();
            advance();
        }
        return out;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Letter parse_letter(Cursor& c) {
    std::string label = c.lower_run();
    if (label.empty()) c.fail("expected letter label");
    std::string digits = c.digit_run();
    if (digits.empty()) c.fail("expected letter index");
    long idx = 0;
    for (char d : digits) {
        idx = idx * 10 + (d - '0');
        if (idx > 1000000) c.fail("letter index out of range");
    }
    if (idx < 1) c.fail("letter index must be >= 1");
    return Letter{label, static_cast<int>(idx)};
}

Word parse_word_body(Cursor& c) {
    Word w;
    c.skip_ws();
    while (!c.done() && c.peek() >= 'a' && c.peek() <= 'z') {
        w.push_back(parse_letter(c));
        c.skip_ws();
    }
    if (w.empty()) c.fail("expected a nonempty word");
    return w;
}

MomentSymbol parse_moment_body(Cursor& c) {
    std::string head = c.lower_run();
    std::string digits = c.digit_run();
    if (head != "phi" || (digits != "1" && digits != "2"))
        c.fail("expected phi1(...) or phi2(...)");
    c.skip_ws();
    c.expect('(');
    Word w1 = parse_word_body(c);
    if (digits == "1") {
        c.skip_ws();
        c.expect(')');
        return make_phi1(std::move(w1));
    }
    c.skip_ws();
    c.expect(',');
    Word w2 = parse_word_body(c);
    c.skip_ws();
    c.expect(')');
    return make_phi2(std::move(w1), std::move(w2));
}

void expect_end(Cursor& c) {
    c.skip_ws();
    if (!c.done()) c.fail("trailing input");
}

// Recursive-descent expression grammar:
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := rational | moment | unknown | "(" expr ")"
class ExprParser {
  public:
    ExprParser(Cursor& c, const SymmetryFlags& flags) : c_(c), flags_(flags) {}

    PolyExpr parse_expression() {
        c_.skip_ws();
        bool neg = c_.try_consume('-');
        PolyExpr acc = parse_term();
        if (neg) acc = acc.scaled(CoeffPoly(Rational(-1)));
        for (;;) {
            c_.skip_ws();
            if (c_.try_consume('+')) {
                acc = acc + parse_term();
            } else if (c_.try_consume('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

  private:
    PolyExpr parse_term() {
        PolyExpr acc = parse_factor();
        for (;;) {
            c_.skip_ws();
            if (c_.try_consume('*')) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    PolyExpr parse_factor() {
        c_.skip_ws();
        if (c_.try_consume('(')) {
            PolyExpr inner = parse_expression();
            c_.skip_ws();
            c_.expect(')');
            return inner;
        }
        char ch = c_.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = c_.digit_run();
            std::string den;
            if (c_.try_consume('/')) {
                den = c_.digit_run();
                if (den.empty()) c_.fail("expected denominator");
            }
            Rational q = parse_rational(den.empty() ? num : num + "/" + den);
            return PolyExpr(q);
        }
        if (ch >= 'a' && ch <= 'z') {
            std::string label = c_.lower_run();
            std::string digits = c_.digit_run();
            if (label == "phi" && (digits == "1" || digits == "2")) {
                c_.skip_ws();
                c_.expect('(');
                Word w1 = parse_word_body(c_);
                MomentSymbol s;
                if (digits == "1") {
                    s = make_phi1(std::move(w1));
                } else {
                    c_.skip_ws();
                    c_.expect(',');
                    Word w2 = parse_word_body(c_);
                    s = make_phi2(std::move(w1), std::move(w2));
                }
                c_.skip_ws();
                c_.expect(')');
                return PolyExpr::symbol_term(CoeffPoly(Rational(1)), s, flags_);
            }
            if (digits.empty()) c_.fail("expected unknown index");
            int exp = 1;
            if (c_.try_consume('^')) {
                std::string e = c_.digit_run();
                if (e.empty()) c_.fail("expected exponent");
                exp = std::stoi(e);
            }
            return PolyExpr(CoeffPoly::variable(label + digits, exp));
        }
        c_.fail("expected a factor");
    }

    Cursor& c_;
    SymmetryFlags flags_;
};

}  // namespace

Word parse_word(const std::string& text) {
    Cursor c(text);
    Word w = parse_word_body(c);
    expect_end(c);
    return w;
}

MomentSymbol parse_moment(const std::string& text) {
    Cursor c(text);
    c.skip_ws();
    MomentSymbol s = parse_moment_body(c);
    expect_end(c);
    return s;
}

PolyExpr parse_expr(const std::string& text, const SymmetryFlags& flags) {
    Cursor c(text);
    ExprParser p(c, flags);
    PolyExpr e = p.parse_expression();
    expect_end(c);
    return e;
}

}  // namespace uniprod
