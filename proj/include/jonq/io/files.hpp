#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jonq/groebner/ideal.hpp"
#include "jonq/rmap/rational_map.hpp"

namespace jonq {

/// Text formats for ideals and maps:
///
///     ring n=<N> field=<Q|GF(p)>
///     map coords=<N+1>          (maps only)
///     <one polynomial per line>
///
/// in N+1 variables x0..xN. `#` starts a comment; blank lines are skipped.
struct ReadOptions {
    /// Reinterprets the coefficients in this field instead of the header's.
    std::optional<Field> field;
    TermOrder order = TermOrder::grevlex();
};

struct InputFile {
    Ring ring;
    /// Set for map files.
    std::optional<RationalMap> map;
    Ideal ideal;
};

/// Throws SyntaxError (with file line and column), UnknownVariable,
/// BadCharacteristic and the map validation errors.
InputFile parse_input(std::string_view text, const ReadOptions& options = {});
InputFile read_input(const std::string& path, const ReadOptions& options = {});

/// Canonical text; parse_input gives back the same value.
std::string format_ideal(const Ideal& I);
std::string format_map(const RationalMap& F);

} // namespace jonq
