#include "starpi/parser.hpp"

#include <cctype>
#include <vector>

namespace starpi {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    NCPoly run() {
        NCPoly p = poly();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    long parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) fail("number too large");
            ++pos_;
        }
        return v;
    }

    Rational parse_rational() {
        long num = parse_nat();
        if (eat('/')) {
            size_t at = pos_;
            long den = parse_nat();
            if (den == 0) throw parse_error("zero denominator", at);
            return Rational(num, den);
        }
        return Rational(num);
    }

    bool starts_factor() {
        char c = peek();
        return c == 'y' || c == 'z' || c == '[' || c == '(';
    }

    NCPoly primary() {
        char c = peek();
        if (c == 'y' || c == 'z') {
            ++pos_;
            long idx = parse_nat();
            if (idx < 1) fail("variable index must be positive");
            Variable v{c == 'y' ? Variable::Sym : Variable::Skew, static_cast<int>(idx)};
            return NCPoly(v);
        }
        if (c == '(') {
            ++pos_;
            NCPoly p = poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '[') {
            ++pos_;
            std::vector<NCPoly> args{poly()};
            while (eat(',')) args.push_back(poly());
            if (!eat(']')) fail("expected ']' or ','");
            if (args.size() < 2) fail("commutator needs at least two arguments");
            return commutator(std::span<const NCPoly>(args));
        }
        fail("expected a variable, '[' or '('");
    }

    NCPoly factor() {
        NCPoly p = primary();
        for (;;) {
            if (eat('^')) {
                long e = parse_nat();
                NCPoly r = NCPoly::unit();
                for (long i = 0; i < e; ++i) r = r * p;
                p = r;
            } else if (eat('~')) {
                p = involute(p);
            } else {
                return p;
            }
        }
    }

    NCPoly term() {
        NCPoly p = NCPoly::unit();
        bool any = false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            p = NCPoly(parse_rational());
            any = true;
        }
        while (starts_factor()) {
            p = p * factor();
            any = true;
        }
        if (!any) fail("expected a term");
        return p;
    }

    NCPoly poly() {
        NCPoly p;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        p = neg ? -term() : term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }
};

}  // namespace

NCPoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace starpi
