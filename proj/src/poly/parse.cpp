#include "solvlat/poly/parse.hpp"

#include "solvlat/util/parse_error.hpp"

#include <algorithm>
#include <cctype>

namespace solvlat::poly {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, std::size_t line)
        : m_text(text), m_vars(vars), m_line(line)
    {
    }

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (m_pos != m_text.size()) fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, m_line, m_pos + 1); }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    }

    bool accept(char c)
    {
        skip_space();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = m_pos;
                const MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    m_pos = at;
                    fail("division only by a nonzero constant");
                }
                acc = (Rational(1) / d.constant_term()) * acc;
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
        if (start == m_pos) fail("expected a nonnegative integer exponent");
        if (m_pos - start > 4) {
            m_pos = start;
            fail("exponent too large");
        }
        return base.pow(static_cast<unsigned>(std::stoul(std::string(m_text.substr(start, m_pos - start)))));
    }

    MultiPoly atom()
    {
        skip_space();
        if (m_pos >= m_text.size()) fail("unexpected end of input");
        const char c = m_text[m_pos];
        if (c == '(') {
            ++m_pos;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
            return MultiPoly::constant(m_vars, Rational(exact::Integer(std::string(m_text.substr(start, m_pos - start)))));
        }
        if (ident_start(c)) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && ident_char(m_text[m_pos])) ++m_pos;
            const std::string name(m_text.substr(start, m_pos - start));
            if (std::find(m_vars.begin(), m_vars.end(), name) == m_vars.end()) {
                m_pos = start;
                fail("unknown variable '" + name + "'");
            }
            return MultiPoly::variable(m_vars, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view m_text;
    const std::vector<std::string>& m_vars;
    std::size_t m_line;
    std::size_t m_pos = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables, std::size_t line)
{
    return Parser(text, variables, line).parse();
}

std::vector<std::string> scan_variables(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() && ident_char(text[i])) ++i;
            continue;
        }
        if (!ident_start(text[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && ident_char(text[i])) ++i;
        std::string name(text.substr(start, i - start));
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    }
    return out;
}

MultiPoly parse_polynomial(std::string_view text) { return parse_polynomial(text, scan_variables(text)); }

}  // namespace solvlat::poly
