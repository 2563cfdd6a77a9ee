#include "jonq/ringkit/monomial.hpp"

#include <algorithm>
#include <limits>

#include "jonq/error.hpp"

namespace jonq {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end)
{
    const unsigned da = a.partial_degree(begin, end);
    const unsigned db = b.partial_degree(begin, end);
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = end; i-- > begin;) {
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

Monomial::Monomial(std::initializer_list<unsigned> exponents)
{
    if (exponents.size() > kMaxVariables)
        raise(Errc::InvalidArgument, "too many variables in monomial");
    std::size_t i = 0;
    for (unsigned e : exponents)
        set(i++, e);
}

Monomial Monomial::variable(std::size_t index, unsigned power)
{
    Monomial m;
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned value)
{
    if (i >= kMaxVariables)
        raise(Errc::InvalidArgument, "variable index " + std::to_string(i) + " out of range");
    if (value > kMaxExponent)
        raise(Errc::InvalidArgument, "exponent overflow");
    degree_ = degree_ - exps_[i] + value;
    exps_[i] = static_cast<Exponent>(value);
}

unsigned Monomial::partial_degree(std::size_t begin, std::size_t end) const
{
    unsigned d = 0;
    for (std::size_t i = begin; i < end; ++i)
        d += exps_[i];
    return d;
}

std::size_t Monomial::support_end() const
{
    for (std::size_t i = kMaxVariables; i-- > 0;)
        if (exps_[i])
            return i + 1;
    return 0;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] && other.exps_[i])
            return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
        if (e > kMaxExponent)
            raise(Errc::InvalidArgument, "exponent overflow");
        r.exps_[i] = static_cast<Monomial::Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Monomial::to_string() const
{
    if (is_one())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (!exps_[i])
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i);
        if (exps_[i] > 1)
            out += '^' + std::to_string(exps_[i]);
    }
    return out;
}

TermOrder TermOrder::parse(const std::string& text)
{
    if (text == "grevlex")
        return grevlex();
    if (text == "lex")
        return lex();
    if (text.rfind("elim(", 0) == 0 && text.back() == ')') {
        const int k = std::stoi(text.substr(5, text.size() - 6));
        if (k < 0 || k > static_cast<int>(kMaxVariables))
            raise(Errc::InvalidArgument, "bad elimination block " + text);
        return elimination(static_cast<std::uint8_t>(k));
    }
    raise(Errc::InvalidArgument, "unknown term order '" + text + "' (expected grevlex, lex or elim(k))");
}

int TermOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const
{
    switch (kind) {
    case Kind::Grevlex:
        return compare_grevlex(a, b, 0, nvars);
    case Kind::Lex:
        for (std::size_t i = 0; i < nvars; ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    case Kind::BlockElimination: {
        const std::size_t k = std::min<std::size_t>(block, nvars);
        if (const int c = compare_grevlex(a, b, 0, k))
            return c;
        return compare_grevlex(a, b, k, nvars);
    }
    }
    return 0;
}

std::string TermOrder::name() const
{
    switch (kind) {
    case Kind::Grevlex:
        return "grevlex";
    case Kind::Lex:
        return "lex";
    case Kind::BlockElimination:
        return "elim(" + std::to_string(block) + ")";
    }
    return "?";
}

} // namespace jonq
