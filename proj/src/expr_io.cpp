#include "tristrip/expr_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace tristrip {

namespace {

constexpr unsigned kMaxExponent = 1000000;

enum class Tok { Integer, Variable, Caret, Plus, Minus, Star, Slash, LParen, RParen, End, Unknown };

struct Token {
    Tok kind = Tok::End;
    std::size_t pos = 0;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size()) return {Tok::End, start, {}};
        const char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            return {Tok::Integer, start, src_.substr(start, i_ - start)};
        }
        ++i_;
        const std::string_view text = src_.substr(start, 1);
        switch (c) {
            case 'x':
            case 'y': return {Tok::Variable, start, text};
            case '^': return {Tok::Caret, start, text};
            case '+': return {Tok::Plus, start, text};
            case '-': return {Tok::Minus, start, text};
            case '*': return {Tok::Star, start, text};
            case '/': return {Tok::Slash, start, text};
            case '(': return {Tok::LParen, start, text};
            case ')': return {Tok::RParen, start, text};
            default: return {Tok::Unknown, start, text};
        }
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Integer: return "integer '" + std::string(t.text) + "'";
        case Tok::Unknown: return "character '" + std::string(t.text) + "'";
        default: return "'" + std::string(t.text) + "'";
    }
}

struct ParseFailure {
    ParseError error;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    BiPoly parse() {
        BiPoly value = expr();
        if (tok_.kind != Tok::End) throw fail("'+', '-', or end of input");
        return value;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    ParseFailure fail(std::string expected) const {
        return ParseFailure{{tok_.pos, std::move(expected), describe(tok_)}};
    }

    static bool starts_factor(Tok k) {
        return k == Tok::Integer || k == Tok::Variable || k == Tok::LParen;
    }

    BiPoly expr() {
        bool negate = false;
        if (tok_.kind == Tok::Minus) {
            negate = true;
            advance();
        }
        BiPoly sum = term();
        if (negate) sum = -sum;
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            const bool subtract = tok_.kind == Tok::Minus;
            advance();
            if (subtract)
                sum -= term();
            else
                sum += term();
        }
        return sum;
    }

    BiPoly term() {
        BiPoly product = factor();
        for (;;) {
            if (tok_.kind == Tok::Star) {
                advance();
                product = product * factor();
            } else if (starts_factor(tok_.kind)) {
                product = product * factor();
            } else {
                break;
            }
        }
        return product;
    }

    BiPoly factor() {
        switch (tok_.kind) {
            case Tok::Integer: {
                const Integer num{std::string(tok_.text)};
                advance();
                if (tok_.kind != Tok::Slash) return BiPoly(Rational(num));
                advance();
                if (tok_.kind != Tok::Integer) throw fail("integer denominator");
                const Integer den{std::string(tok_.text)};
                if (sgn(den) == 0) throw fail("nonzero denominator");
                advance();
                return BiPoly(Rational(num, den));
            }
            case Tok::Variable: {
                const bool is_x = tok_.text == "x";
                advance();
                unsigned exp = 1;
                if (tok_.kind == Tok::Caret) {
                    advance();
                    if (tok_.kind != Tok::Integer) throw fail("nonnegative integer exponent");
                    if (tok_.text.size() > 7) throw fail("exponent at most 1000000");
                    exp = static_cast<unsigned>(std::stoul(std::string(tok_.text)));
                    if (exp > kMaxExponent) throw fail("exponent at most 1000000");
                    advance();
                }
                return BiPoly::monomial(1, is_x ? exp : 0, is_x ? 0 : exp);
            }
            case Tok::LParen: {
                advance();
                BiPoly inner = expr();
                if (tok_.kind != Tok::RParen) throw fail("')'");
                advance();
                return inner;
            }
            default: throw fail("number, variable, or '('");
        }
    }

    Lexer lexer_;
    Token tok_;
};

// Display order: total degree descending, then x-exponent descending.
std::vector<std::pair<Exponents, Rational>> display_order(const BiPoly& p) {
    std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const unsigned ta = a.first.x + a.first.y;
        const unsigned tb = b.first.x + b.first.y;
        if (ta != tb) return ta > tb;
        return a.first.x > b.first.x;
    });
    return terms;
}

void append_power(std::string& out, const char* var, unsigned exp, bool braces) {
    out += var;
    if (exp == 1) return;
    out += '^';
    if (braces) {
        out += '{';
        out += std::to_string(exp);
        out += '}';
    } else {
        out += std::to_string(exp);
    }
}

std::string format_plain_or_latex(const BiPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : display_order(p)) {
        if (first) {
            if (c.sign() < 0) out += '-';
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const Rational mag = abs(c);
        const bool has_vars = e.x > 0 || e.y > 0;
        if (!has_vars || !(mag == Rational(1))) {
            if (latex && !mag.is_integer()) {
                out += "\\frac{" + mag.numerator().get_str() + "}{" +
                       mag.denominator().get_str() + "}";
            } else {
                out += mag.str();
            }
            if (has_vars) out += ' ';
        }
        if (e.x > 0) {
            append_power(out, "x", e.x, latex);
            if (e.y > 0) out += ' ';
        }
        if (e.y > 0) append_power(out, "y", e.y, latex);
    }
    return out;
}

std::string format_json(const BiPoly& p) {
    nlohmann::json doc;
    doc["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : display_order(p))
        doc["terms"].push_back({{"x", e.x},
                                {"y", e.y},
                                {"num", c.numerator().get_str()},
                                {"den", c.denominator().get_str()}});
    return doc.dump();
}

bool is_decimal_integer(const std::string& s, bool allow_sign) {
    std::string_view rest = s;
    if (allow_sign && !rest.empty() && (rest.front() == '-' || rest.front() == '+'))
        rest.remove_prefix(1);
    if (rest.empty()) return false;
    return std::all_of(rest.begin(), rest.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::string ParseError::message() const {
    return "parse error at offset " + std::to_string(position) + ": expected " + expected +
           ", found " + found;
}

ParseResult parse_bipoly(std::string_view text) {
    try {
        return Parser(text).parse();
    } catch (const ParseFailure& f) {
        return f.error;
    }
}

ParseResult parse_bipoly_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        return ParseError{e.byte > 0 ? e.byte - 1 : 0, "well-formed JSON", "invalid JSON"};
    }
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
        return ParseError{0, "object with a \"terms\" array", "other JSON shape"};
    BiPoly result;
    for (const auto& item : doc["terms"]) {
        if (!item.is_object() || !item.contains("x") || !item.contains("y") ||
            !item.contains("num") || !item.contains("den"))
            return ParseError{0, "term object with x, y, num, den", "other JSON shape"};
        if (!item["x"].is_number_unsigned() || !item["y"].is_number_unsigned())
            return ParseError{0, "nonnegative integer exponents", "other JSON value"};
        const auto x = item["x"].get<unsigned long long>();
        const auto y = item["y"].get<unsigned long long>();
        if (x > kMaxExponent || y > kMaxExponent)
            return ParseError{0, "exponent at most 1000000", "larger exponent"};
        if (!item["num"].is_string() || !item["den"].is_string())
            return ParseError{0, "num and den as decimal strings", "other JSON value"};
        const auto num = item["num"].get<std::string>();
        const auto den = item["den"].get<std::string>();
        if (!is_decimal_integer(num, true))
            return ParseError{0, "integer numerator string", "'" + num + "'"};
        if (!is_decimal_integer(den, false) || Integer(den) == 0)
            return ParseError{0, "positive integer denominator string", "'" + den + "'"};
        result += BiPoly::monomial(Rational(Integer(num), Integer(den)),
                                   static_cast<unsigned>(x), static_cast<unsigned>(y));
    }
    return result;
}

std::string format_bipoly(const BiPoly& p, PolyFormat style) {
    switch (style) {
        case PolyFormat::Text: return format_plain_or_latex(p, false);
        case PolyFormat::LaTeX: return format_plain_or_latex(p, true);
        case PolyFormat::Json: return format_json(p);
    }
    return {};
}

std::string format_unipoly(const UniPoly& p, PolyFormat style) {
    return format_bipoly(p.to_bipoly(), style);
}

}  // namespace tristrip
