#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jonq/ringkit/polynomial.hpp"

namespace jonq {

/// Seeded generator for reproducible instances. Same seed, same field, same
/// call sequence: same polynomials, on every platform (no std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin(unsigned percent) { return uniform(0, 99) < static_cast<long>(percent); }

    /// Small integers in [-range, range] lifted into the field; optionally nonzero.
    Scalar scalar(Field field, long range = 5, bool nonzero = false);

    /// Homogeneous form of `degree` in variables [0, vars) of `ring`, each
    /// monomial kept with probability `density` percent. May be zero.
    Polynomial form(const Ring& ring, unsigned degree, std::size_t vars, unsigned density = 60, long range = 5);
    /// As `form`, resampled until nonzero.
    Polynomial nonzero_form(const Ring& ring, unsigned degree, std::size_t vars, unsigned density = 60, long range = 5);

private:
    std::mt19937_64 engine_;
};

/// All monomials of exact degree d in variables [0, vars), descending grevlex.
std::vector<Monomial> monomials_of_degree(unsigned degree, std::size_t vars);

} // namespace jonq
