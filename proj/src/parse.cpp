#include "jetforge/parse.hpp"

#include <cctype>
#include <optional>

namespace jetforge {
namespace {

class Parser {
public:
    Parser(const std::string& text, const ParseContext& context)
        : text_(text), ctx_(context) {}

    Poly parse() {
        Poly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Poly expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (get() == '-');
        Poly p = term();
        if (negate) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly t = term();
            p = (c == '+') ? p + t : p - t;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            p = p * factor();
        }
        return p;
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("exponent must be a nonnegative integer literal");
            long long e = integer_literal();
            Poly p = Poly::constant(ctx_.field, Rational(1));
            for (long long k = 0; k < e; ++k) p = p * base;
            return p;
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Poly p = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return Poly::zero(ctx_.field); // unreachable
    }

    Poly number() {
        long long num = integer_literal();
        skip_ws();
        if (peek() == '/') {
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected integer denominator");
            long long den = integer_literal();
            if (den == 0) fail("zero denominator");
            return Poly::constant(ctx_.field, Rational(num, den));
        }
        return Poly::constant(ctx_.field, Rational(num));
    }

    Poly identifier() {
        std::size_t start = pos_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
        skip_ws();
        if (name == "x" && peek() == '[') {
            int level = bracketed_int(start);
            skip_ws();
            if (peek() != '[') fail("expected second index of jet variable");
            int index = bracketed_int(start);
            if (level < 0) fail("jet variable level must be >= 0", start);
            if (index < 1) fail("jet variable index must be >= 1", start);
            if (!ctx_.ambient_vars.empty() &&
                index > static_cast<int>(ctx_.ambient_vars.size()))
                fail("jet variable index exceeds ambient dimension", start);
            return Poly::variable(ctx_.field, JetVar{level, index});
        }
        for (std::size_t j = 0; j < ctx_.ambient_vars.size(); ++j)
            if (ctx_.ambient_vars[j] == name)
                return Poly::variable(ctx_.field, JetVar{0, static_cast<int>(j) + 1});
        fail("unknown variable '" + name + "'", start);
        return Poly::zero(ctx_.field); // unreachable
    }

    int bracketed_int(std::size_t errpos) {
        get(); // '['
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected nonnegative integer index", errpos);
        long long v = integer_literal();
        skip_ws();
        if (peek() != ']') fail("expected ']'");
        get();
        return static_cast<int>(v);
    }

    long long integer_literal() {
        long long v = 0;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (1LL << 60)) fail("integer literal too large", start);
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(message, at);
    }

    const std::string& text_;
    const ParseContext& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, const ParseContext& context) {
    return Parser(text, context).parse();
}

} // namespace jetforge
