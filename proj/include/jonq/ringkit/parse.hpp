#pragma once

#include <cstddef>
#include <string_view>

#include "jonq/ringkit/polynomial.hpp"

namespace jonq {

/// Reads one polynomial:
///
///     poly   := ['-'] term (('+'|'-') term)*
///     term   := coeff ('*' factor)* | factor ('*' factor)*
///     factor := 'x' nat ('^' nat)?
///     coeff  := int ('/' nat)?
///
/// Blanks may separate tokens. `line` is only used for error positions.
/// Throws SyntaxError, UnknownVariable, BadCharacteristic.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 0);

} // namespace jonq
