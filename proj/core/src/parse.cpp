#include "logdiv/parse.hpp"

#include "logdiv/errors.hpp"

#include <cctype>

namespace logdiv {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Context& ctx) : s_(text), ctx_(ctx) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    const Context& ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected non-negative integer exponent");
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos_;
            }
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ctx_, rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("expected number, variable or '('");
    }

    Rat rational() {
        const std::string num = digits();
        if (peek_is('/')) {
            // lookahead: only a digit run may follow; otherwise '/' is foreign
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = save;
                return Rat(Int(num, 10));
            }
            const std::string den = digits();
            Int d(den, 10);
            if (d == 0) fail("zero denominator");
            Rat r(Int(num, 10), d);
            r.canonicalize();
            return r;
        }
        return Rat(Int(num, 10));
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        if (out.empty()) fail("expected digits");
        return out;
    }

    Poly variable() {
        std::string name(1, s_[pos_++]);
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        const auto idx = ctx_.index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        return Poly::variable(ctx_, *idx);
    }
};

} // namespace

Poly parse_poly(const std::string& text, const Context& ctx) {
    return Parser(text, ctx).run();
}

} // namespace logdiv
