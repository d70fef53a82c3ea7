#include "logdiv/parser.hpp"

#include <cctype>

namespace logdiv {

namespace {

constexpr int kMaxExponent = 512;

struct Lexer {
    const std::string &text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char *what) {
        if (!accept(c))
            throw parse_error(std::string("expected ") + what, pos);
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    Int read_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw parse_error("expected integer literal", start);
        return Int(text.substr(start, pos - start));
    }
    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    const std::vector<std::string> &vars;
    int n;

    Parser(const std::string &text, const std::vector<std::string> &v)
        : lex{text}, vars(v), n(static_cast<int>(v.size())) {}

    Series parse() {
        Series s = expr();
        if (!lex.eof())
            throw parse_error("trailing input", lex.pos);
        return s;
    }

    Series expr() {
        Series s = term();
        for (;;) {
            if (lex.accept('+'))
                s += term();
            else if (lex.accept('-'))
                s -= term();
            else
                return s;
        }
    }

    Series term() {
        Series s = factor();
        while (lex.accept('*'))
            s = s * factor();
        return s;
    }

    Series factor() {
        bool negative = false;
        for (;;) {
            if (lex.accept('-'))
                negative = !negative;
            else if (lex.accept('+'))
                ;
            else
                break;
        }
        Series b = base();
        if (lex.accept('^')) {
            size_t at = lex.pos;
            Int e = lex.read_uint();
            if (e > kMaxExponent)
                throw parse_error("exponent too large", at);
            Series p = Series::constant(n, 1);
            for (long i = 0; i < e.get_si(); ++i)
                p = p * b;
            b = p;
        }
        return negative ? -b : b;
    }

    Series base() {
        if (lex.at_digit()) {
            Int num = lex.read_uint();
            if (lex.accept('/')) {
                size_t at = lex.pos;
                Int den = lex.read_uint();
                if (den == 0)
                    throw parse_error("zero denominator", at);
                Rat q(num, den);
                q.canonicalize();
                return Series::constant(n, q);
            }
            return Series::constant(n, Rat(num));
        }
        if (lex.at_ident()) {
            size_t at = lex.pos;
            std::string name = lex.read_ident();
            for (int i = 0; i < n; ++i)
                if (vars[static_cast<size_t>(i)] == name)
                    return Series::variable(n, i);
            throw parse_error("unknown variable '" + name + "'", at);
        }
        if (lex.accept('(')) {
            Series s = expr();
            lex.expect(')', "')'");
            return s;
        }
        throw parse_error("expected number, variable or '('", lex.pos);
    }
};

} // namespace

Series parse_series(const std::string &text, const std::vector<std::string> &vars) {
    Parser p(text, vars);
    return p.parse();
}

std::string print_monomial(const Monomial &m, const std::vector<std::string> &vars) {
    std::string out;
    for (size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[i];
        if (m.exp[i] != 1)
            out += "^" + std::to_string(m.exp[i]);
    }
    return out;
}

std::string print_series(const Series &s, const std::vector<std::string> &vars) {
    if (static_cast<int>(vars.size()) != s.nvars())
        throw std::invalid_argument("print_series: variable list length mismatch");
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : s.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                out += " - ";
                a = -a;
            } else {
                out += " + ";
            }
        }
        std::string mono = print_monomial(m, vars);
        if (mono.empty())
            out += rat_to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_to_string(a) + "*" + mono;
    }
    return out;
}

} // namespace logdiv
