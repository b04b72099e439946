#include "solvlat/lie/format.hpp"

#include "solvlat/util/parse_error.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace solvlat::lie {

namespace {

class LineReader {
public:
    LineReader(std::string_view text, std::size_t line) : m_text(text), m_line(line) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, m_line, m_pos + 1); }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    }
    bool at_end()
    {
        skip_space();
        return m_pos >= m_text.size();
    }
    char peek()
    {
        skip_space();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++m_pos;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string word()
    {
        skip_space();
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) ||
                                         m_text[m_pos] == '_'))
            ++m_pos;
        if (start == m_pos) fail("expected an identifier");
        return std::string(m_text.substr(start, m_pos - start));
    }
    std::size_t position() const { return m_pos; }
    void rewind(std::size_t pos) { m_pos = pos; }

    exact::Integer integer()
    {
        skip_space();
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
        if (start == m_pos) fail("expected a number");
        return exact::Integer(std::string(m_text.substr(start, m_pos - start)));
    }

private:
    std::string_view m_text;
    std::size_t m_line;
    std::size_t m_pos = 0;
};

std::string_view strip_comment(std::string_view line)
{
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

VectorQ parse_rhs(LineReader& r, const LieAlgebra& L)
{
    VectorQ v(L.dim(), 0);
    bool first = true;
    while (!r.at_end()) {
        Rational sign = 1;
        if (r.accept('-'))
            sign = -1;
        else if (!r.accept('+') && !first)
            r.fail("expected '+' or '-'");
        first = false;

        Rational coeff = 1;
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(r.peek()))) {
            exact::Integer num = r.integer();
            exact::Integer den = 1;
            if (r.accept('/')) {
                const std::size_t at = r.position();
                den = r.integer();
                if (den == 0) {
                    r.rewind(at);
                    r.fail("zero denominator");
                }
            }
            coeff = exact::make_rational(num, den);
            has_coeff = true;
            r.accept('*');
        }
        const char c = r.peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = r.position();
            const std::string label = r.word();
            std::size_t k = 0;
            try {
                k = L.index_of(label);
            } catch (const std::invalid_argument&) {
                r.rewind(at);
                r.skip_space();
                r.fail("unknown basis label '" + label + "'");
            }
            v[k] += sign * coeff;
        } else if (!has_coeff || coeff != 0) {
            r.fail("expected a basis label");
        }
    }
    if (first) r.fail("empty right-hand side");
    return v;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text)
{
    std::size_t dim = 0;
    bool have_dim = false;
    LieAlgebra L;
    bool have_basis = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        LineReader r(strip_comment(raw), lineno);
        if (r.at_end()) continue;

        if (!have_dim) {
            if (r.word() != "dim") r.fail("expected 'dim N'");
            const std::size_t at = r.position();
            const exact::Integer n = r.integer();
            if (n <= 0 || n > 64) {
                r.rewind(at);
                r.skip_space();
                r.fail("dimension must be between 1 and 64");
            }
            dim = n.get_ui();
            have_dim = true;
            if (!r.at_end()) r.fail("trailing input after dimension");
            continue;
        }
        if (!have_basis) {
            if (r.word() != "basis") r.fail("expected 'basis <labels>'");
            std::vector<std::string> labels;
            std::set<std::string> unique;
            while (!r.at_end()) {
                const std::size_t at = r.position();
                labels.push_back(r.word());
                if (!unique.insert(labels.back()).second) {
                    r.rewind(at);
                    r.skip_space();
                    r.fail("duplicate basis label '" + labels.back() + "'");
                }
            }
            if (labels.size() != dim)
                r.fail("basis has " + std::to_string(labels.size()) + " labels, expected " + std::to_string(dim));
            L = LieAlgebra(labels);
            have_basis = true;
            continue;
        }

        r.expect('[');
        std::size_t at = r.position();
        r.skip_space();
        at = r.position();
        const std::string a = r.word();
        r.expect(',');
        r.skip_space();
        const std::size_t bt = r.position();
        const std::string b = r.word();
        r.expect(']');
        r.expect('=');
        std::size_t i = 0, j = 0;
        try {
            i = L.index_of(a);
        } catch (const std::invalid_argument&) {
            r.rewind(at);
            r.fail("unknown basis label '" + a + "'");
        }
        try {
            j = L.index_of(b);
        } catch (const std::invalid_argument&) {
            r.rewind(bt);
            r.fail("unknown basis label '" + b + "'");
        }
        if (i == j) {
            r.rewind(bt);
            r.fail("bracket of a basis element with itself");
        }
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
            r.rewind(at);
            r.fail("bracket [" + a + ", " + b + "] defined twice");
        }
        L.set_bracket(i, j, parse_rhs(r, L));
    }
    if (!have_dim) throw ParseError("missing 'dim' line", lineno == 0 ? 1 : lineno, 1);
    if (!have_basis) throw ParseError("missing 'basis' line", lineno, 1);
    return L;
}

LieAlgebra load_algebra(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    LieAlgebra L = parse_algebra(ss.str());
    L.set_name(path);
    return L;
}

std::string dump_algebra(const LieAlgebra& L)
{
    std::ostringstream os;
    os << "dim " << L.dim() << "\nbasis";
    for (const auto& l : L.labels()) os << ' ' << l;
    os << '\n';
    for (const auto& [i, j] : L.nonzero_pairs()) {
        os << '[' << L.labels()[i] << ", " << L.labels()[j] << "] =";
        bool first = true;
        const VectorQ& v = L.bracket_basis(i, j);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0) continue;
            const Rational mag = abs(v[k]);
            if (first)
                os << (v[k] < 0 ? " -" : "");
            else
                os << (v[k] < 0 ? " -" : " +");
            os << ' ';
            if (mag != 1) os << exact::to_string(mag) << '*';
            os << L.labels()[k];
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace solvlat::lie
