#include "steenspec_cli/parse.hpp"

#include <cctype>
#include <limits>

namespace steenspec::cli {

namespace {

// Powers of non-monomials expand quickly; keep them desk-sized.
constexpr std::uint64_t max_exponent = 4096;

class Parser
{
public:
    Parser(std::string_view text, const RingPresentation* ring, int line0, int col0)
        : text_(text), ring_(ring), line_(line0), col_(col0)
    {
    }

    Poly run()
    {
        skip();
        if (at_end())
            fail("syntax", "empty expression");
        Poly p = expr();
        skip();
        if (!at_end())
            fail("syntax", std::string("unexpected '") + peek() + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& kind, const std::string& msg) const
    {
        throw ParseError(kind, msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_),
                         line_, col_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    bool accept(char c)
    {
        skip();
        if (peek() != c)
            return false;
        advance();
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (at_end())
                fail("syntax", std::string("expected '") + c + "' but input ended");
            fail("syntax", std::string("expected '") + c + "', found '" + peek() + "'");
        }
    }

    std::uint64_t number()
    {
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("syntax", at_end() ? "expected a number but input ended" : std::string("expected a number, found '") + peek() + "'");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                fail("syntax", "number too large");
            advance();
        }
        return v;
    }

    Poly mul(const Poly& a, const Poly& b) const { return ring_ ? poly_mul(a, b, *ring_) : a * b; }

    Poly expr()
    {
        Poly p = term();
        while (accept('+'))
            p += term();
        return p;
    }

    Poly term()
    {
        Poly p = factor();
        while (accept('*'))
            p = mul(p, factor());
        return p;
    }

    Poly factor()
    {
        Poly base = atom();
        if (!accept('^'))
            return base;
        const int line = line_, col = col_;
        const auto e = number();
        if (e == 0)
            throw ParseError("syntax", "exponent 0 is not allowed at line " + std::to_string(line) + ", column " +
                                           std::to_string(col),
                             line, col);
        if (e > max_exponent && base.size() > 1)
            fail("bounds-exceeded", "exponent above " + std::to_string(max_exponent) + " on a sum");
        Poly r = base.pow(static_cast<std::uint32_t>(e));
        return ring_ ? ring_->reduce(r) : r;
    }

    Generator generator_at(int line, int col, bool is_xi, std::uint64_t a, std::uint64_t b) const
    {
        auto bad = [&](const std::string& kind, const std::string& msg) {
            throw ParseError(kind, msg + " at line " + std::to_string(line) + ", column " + std::to_string(col), line,
                             col);
        };
        try {
            if (is_xi) {
                if (ring_)
                    bad("not-ring-element", "xi(" + std::to_string(a) +
                                                ") is not an element of an Ext ring; xi's only appear in coaction output");
                return Generator::xi(static_cast<int>(a));
            }
            const Generator g = Generator::h(static_cast<int>(a), static_cast<int>(b));
            if (!ring_)
                bad("not-xi", g.to_string() + " is not an element of the dual Steenrod algebra");
            if (!ring_->has_variable(g))
                bad("unknown-generator", g.to_string() + " is not a generator of the active ring");
            return g;
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            bad(e.kind(), e.what());
        }
        return Generator::inverter(); // unreachable
    }

    Poly atom()
    {
        skip();
        const int line = line_, col = col_;
        const char c = peek();
        if (c == '(') {
            advance();
            Poly p = expr();
            expect(')');
            return p;
        }
        if (c == '0' || c == '1') {
            advance();
            if (std::isdigit(static_cast<unsigned char>(peek())))
                fail("syntax", "integer literals other than 0 and 1 are not allowed");
            return c == '1' ? Poly::one() : Poly();
        }
        if (text_.substr(pos_, 3) == "xi(") {
            for (int i = 0; i < 3; ++i)
                advance();
            const auto n = number();
            expect(')');
            return Poly(generator_at(line, col, true, n, 0));
        }
        if (text_.substr(pos_, 2) == "h(") {
            advance();
            advance();
            const auto t = number();
            expect(',');
            const auto s = number();
            expect(')');
            return Poly(generator_at(line, col, false, t, s));
        }
        if (at_end())
            fail("syntax", "expected a term but input ended");
        fail("syntax", std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const RingPresentation* ring_;
    std::size_t pos_ = 0;
    int line_;
    int col_;
};

} // namespace

Poly parse_poly(std::string_view text, const RingPresentation* ring)
{
    return Parser(text, ring, 1, 1).run();
}

std::vector<Poly> parse_poly_list(std::string_view text, const RingPresentation* ring)
{
    std::vector<Poly> out;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        return out;
    int depth = 0, line = 1, col = 1;
    int start_line = 1, start_col = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : ',';
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if ((c == ',' && depth == 0) || i == text.size()) {
            out.push_back(Parser(text.substr(start, i - start), ring, start_line, start_col).run());
            start = i + 1;
            start_line = line;
            start_col = col + 1;
        }
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return out;
}

} // namespace steenspec::cli
