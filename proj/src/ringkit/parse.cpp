#include "jonq/ringkit/parse.hpp"

#include <cctype>
#include <string>

#include "jonq/error.hpp"

namespace jonq {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Ring& ring, std::size_t line) : text_(text), ring_(ring), line_(line) {}

    Polynomial run()
    {
        std::vector<Term> terms;
        skip_blanks();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        terms.push_back(term(negative));
        for (;;) {
            skip_blanks();
            if (at_end())
                break;
            const char c = peek();
            if (c != '+' && c != '-')
                fail("'+', '-' or end of input");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_blanks()
    {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
        throw SyntaxError("expected " + expected + " but found " + found + " at column " + std::to_string(pos_ + 1),
                          line_, pos_ + 1, expected);
    }

    std::string digits(const std::string& what)
    {
        skip_blanks();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            fail(what);
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned small_nat(const std::string& what)
    {
        const std::size_t start = pos_;
        const std::string d = digits(what);
        if (d.size() > 5 || std::stoul(d) > 65535) {
            pos_ = start;
            skip_blanks();
            fail(what + " below 65536");
        }
        return static_cast<unsigned>(std::stoul(d));
    }

    void factor(Monomial& m)
    {
        skip_blanks();
        if (peek() != 'x')
            fail("variable 'x<index>'");
        const std::size_t at = pos_;
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("variable index");
        const unsigned index = small_nat("variable index");
        if (index >= ring_.nvars())
            raise(Errc::UnknownVariable,
                  "x" + std::to_string(index) + " at column " + std::to_string(at + 1) + " is not a variable of a ring with " +
                      std::to_string(ring_.nvars()) + " variables",
                  {{"line", static_cast<std::int64_t>(line_)}, {"column", static_cast<std::int64_t>(at + 1)}});
        unsigned power = 1;
        skip_blanks();
        if (peek() == '^') {
            ++pos_;
            power = small_nat("exponent");
        }
        m.set(index, m[index] + power);
    }

    Term term(bool negative)
    {
        skip_blanks();
        Monomial m;
        mpq_class c = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits("integer"));
            mpz_class den = 1;
            skip_blanks();
            if (peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                den = mpz_class(digits("denominator"));
                if (den == 0) {
                    pos_ = at;
                    skip_blanks();
                    fail("nonzero denominator");
                }
            }
            c = mpq_class(num, den);
            c.canonicalize();
        } else {
            factor(m);
        }
        for (;;) {
            skip_blanks();
            if (peek() != '*')
                break;
            ++pos_;
            factor(m);
        }
        if (negative)
            c = -c;
        return {m, Scalar::from_rational(ring_.field(), c)};
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line)
{
    return Parser(text, ring, line).run();
}

} // namespace jonq
