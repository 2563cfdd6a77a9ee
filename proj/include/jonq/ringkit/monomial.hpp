#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace jonq {

/// Upper bound on ring variables. Desk-scale instances use at most n+1 = 5
/// variables plus one auxiliary elimination variable.
inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector with inline storage. Unused trailing slots are zero, so
/// monomials from rings with different variable counts compare sensibly.
class Monomial {
public:
    using Exponent = std::uint16_t;

    constexpr Monomial() = default;
    Monomial(std::initializer_list<unsigned> exponents);

    static Monomial variable(std::size_t index, unsigned power = 1);

    Exponent operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned value);
    unsigned degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    /// Degree restricted to variables [begin, end).
    unsigned partial_degree(std::size_t begin, std::size_t end) const;
    /// Largest index with a nonzero exponent plus one.
    std::size_t support_end() const;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; the caller guarantees b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    std::size_t hash() const;
    /// "x0^2*x3"; "1" for the unit monomial.
    std::string to_string() const;

private:
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
};

/// A multiplicative well-order on monomials of a fixed ring.
struct TermOrder {
    enum class Kind : std::uint8_t { Grevlex, Lex, BlockElimination };

    Kind kind = Kind::Grevlex;
    /// For BlockElimination: the first `block` variables are eliminated.
    std::uint8_t block = 0;

    static constexpr TermOrder grevlex() { return {Kind::Grevlex, 0}; }
    static constexpr TermOrder lex() { return {Kind::Lex, 0}; }
    static constexpr TermOrder elimination(std::uint8_t k) { return {Kind::BlockElimination, k}; }
    /// "grevlex", "lex", "elim(k)"
    static TermOrder parse(const std::string& text);

    /// Negative, zero, positive as a <, ==, > b. `nvars` bounds the comparison.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;
    std::string name() const;

    friend constexpr bool operator==(TermOrder a, TermOrder b) { return a.kind == b.kind && a.block == b.block; }
};

} // namespace jonq
