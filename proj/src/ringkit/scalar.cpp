#include "jonq/ringkit/scalar.hpp"

#include <regex>

#include "jonq/error.hpp"

namespace jonq {

namespace {

bool is_odd_prime(std::uint32_t p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

void check_same(const Scalar& a, const Scalar& b)
{
    if (!(a.field() == b.field()))
        raise(Errc::FieldMismatch, "scalars from " + a.field().name() + " and " + b.field().name());
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_odd_prime(p))
        raise(Errc::InvalidArgument, "characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    return Field{p};
}

Field Field::parse(const std::string& text)
{
    if (text == "Q" || text == "q")
        return rationals();
    static const std::regex gf_re(R"((?:GF|gf)[:(]?(\d+)\)?)");
    std::smatch m;
    if (std::regex_match(text, m, gf_re)) {
        const auto value = std::stoull(m[1].str());
        if (value >= (1ull << 31))
            raise(Errc::InvalidArgument, "characteristic too large: " + m[1].str());
        return prime(static_cast<std::uint32_t>(value));
    }
    raise(Errc::InvalidArgument, "unknown field '" + text + "' (expected Q or GF(p))");
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::from_int(Field field, long value)
{
    if (field.is_rational())
        return Scalar(field, mpq_class(value));
    const auto p = static_cast<long>(field.characteristic());
    long r = value % p;
    if (r < 0)
        r += p;
    return Scalar(field, static_cast<std::uint32_t>(r));
}

Scalar Scalar::from_rational(Field field, const mpq_class& value)
{
    if (field.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        return Scalar(field, std::move(v));
    }
    const auto p = field.characteristic();
    const auto den = reduce_mpz(value.get_den(), p);
    if (den == 0)
        raise(Errc::BadCharacteristic, "denominator " + value.get_den().get_str() + " vanishes in " + field.name());
    const auto num = reduce_mpz(value.get_num(), p);
    const auto inv = mod_pow(den, p - 2, p);
    return Scalar(field, static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) * inv % p));
}

bool Scalar::is_zero() const
{
    if (const auto* r = std::get_if<std::uint32_t>(&value_))
        return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* r = std::get_if<std::uint32_t>(&value_))
        return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const
{
    if (const auto* r = std::get_if<std::uint32_t>(&value_))
        return Scalar(field_, *r == 0 ? 0u : field_.characteristic() - *r);
    return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        raise(Errc::InvalidArgument, "division by zero scalar");
    if (const auto* r = std::get_if<std::uint32_t>(&value_))
        return Scalar(field_, mod_pow(*r, field_.characteristic() - 2, field_.characteristic()));
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    check_same(a, b);
    if (const auto* x = std::get_if<std::uint32_t>(&a.value_)) {
        const auto p = a.field_.characteristic();
        std::uint32_t s = *x + std::get<std::uint32_t>(b.value_);
        if (s >= p)
            s -= p;
        return Scalar(a.field_, s);
    }
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    check_same(a, b);
    if (const auto* x = std::get_if<std::uint32_t>(&a.value_)) {
        const auto p = a.field_.characteristic();
        const auto y = std::get<std::uint32_t>(b.value_);
        return Scalar(a.field_, *x >= y ? *x - y : *x + (p - y));
    }
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    check_same(a, b);
    if (const auto* x = std::get_if<std::uint32_t>(&a.value_)) {
        const std::uint64_t prod = static_cast<std::uint64_t>(*x) * std::get<std::uint32_t>(b.value_);
        return Scalar(a.field_, static_cast<std::uint32_t>(prod % a.field_.characteristic()));
    }
    return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.value_ == b.value_;
}

mpq_class Scalar::to_rational() const
{
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
        const auto p = field_.characteristic();
        if (*r > p / 2)
            return mpq_class(-static_cast<long>(p - *r));
        return mpq_class(static_cast<long>(*r));
    }
    return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const
{
    if (const auto* r = std::get_if<std::uint32_t>(&value_))
        return *r;
    return 0;
}

std::string Scalar::to_string() const
{
    return to_rational().get_str();
}

} // namespace jonq
