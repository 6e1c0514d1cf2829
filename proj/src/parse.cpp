#include "topcoh/parse.hpp"

#include <cctype>
#include <string>

namespace topcoh {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    RingPtr ring;

    [[noreturn]] void fail(std::size_t at, const std::string& message) const {
        throw ParseError(at, message + " at position " + std::to_string(at));
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(pos, std::string("expected '") + c + "'");
    }

    bool at_end() {
        skip_space();
        return pos == text.size();
    }

    std::string read_digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(start, "expected digits");
        return std::string(text.substr(start, pos - start));
    }

    // Nonnegative integer or rational literal n/d.
    Rational read_number() {
        std::string num = read_digits();
        std::string den = "1";
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = read_digits();
        }
        if (Rational(den) == 0) fail(pos, "zero denominator");
        Rational value(num + "/" + den);
        value.canonicalize();
        return value;
    }

    unsigned read_exponent() {
        skip_space();
        const std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') fail(start, "negative exponent");
        const std::string digits = read_digits();
        if (pos < text.size() && text[pos] == '/') fail(pos, "fractional exponent");
        unsigned long value = 0;
        try {
            value = std::stoul(digits);
        } catch (const std::out_of_range&) {
            fail(start, "exponent too large");
        }
        if (value > kMaxExponent) fail(start, "exponent too large");
        return static_cast<unsigned>(value);
    }

    Polynomial parse_expression() {
        skip_space();
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        Polynomial acc = parse_term();
        if (negative) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        if (accept('-')) return -parse_factor();
        Polynomial base = parse_base();
        if (accept('^')) return base.pow(read_exponent());
        return base;
    }

    Polynomial parse_base() {
        skip_space();
        if (pos == text.size()) fail(pos, "unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expression();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring, read_number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string name(text.substr(start, pos - start));
            const int index = ring->var_index(name);
            if (index < 0) fail(start, "unknown variable '" + name + "'");
            return Polynomial::variable(ring, index);
        }
        fail(pos, std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    Parser parser{text, 0, ring};
    parser.skip_space();
    if (parser.at_end()) throw ParseError(0, "empty polynomial at position 0");
    Polynomial result = parser.parse_expression();
    if (!parser.at_end()) parser.fail(parser.pos, "trailing input");
    return result;
}

} // namespace topcoh
