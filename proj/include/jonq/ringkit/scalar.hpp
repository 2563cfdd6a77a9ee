#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace jonq {

/// Coefficient field: the rationals, or GF(p) for an odd prime p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws InvalidArgument unless p is an odd prime below 2^31.
    static Field prime(std::uint32_t p);
    /// "Q" or "GF(p)"; the same spelling the file formats use.
    static Field parse(const std::string& text);

    constexpr bool is_rational() const { return modulus_ == 0; }
    constexpr std::uint32_t characteristic() const { return modulus_; }
    std::string name() const;

    friend constexpr bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

private:
    constexpr explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
    std::uint32_t modulus_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator; residues live in [0, p).
class Scalar {
public:
    /// Zero of Q.
    Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}

    static Scalar zero(Field field) { return from_int(field, 0); }
    static Scalar one(Field field) { return from_int(field, 1); }
    static Scalar from_int(Field field, long value);
    /// Throws BadCharacteristic when the denominator vanishes mod p.
    static Scalar from_rational(Field field, const mpq_class& value);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Integer representative in (-p/2, p/2] for GF(p); the exact value for Q.
    mpq_class to_rational() const;
    /// Residue in [0, p). Only meaningful over GF(p).
    std::uint32_t residue() const;

    /// "3", "-2/3"; GF(p) elements print their symmetric representative.
    std::string to_string() const;

private:
    Scalar(Field field, std::uint32_t residue) : field_(field), value_(residue) {}
    Scalar(Field field, mpq_class value) : field_(field), value_(std::move(value)) {}

    Field field_;
    std::variant<std::uint32_t, mpq_class> value_;
};

} // namespace jonq
