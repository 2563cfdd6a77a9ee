#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jonq {

/// Every failure the library reports carries one of these codes. The CLI maps
/// them onto exit statuses and machine-readable diagnostics.
enum class Errc {
    SyntaxError,
    UnknownVariable,
    BadCharacteristic,
    FieldMismatch,
    RingMismatch,
    LengthMismatch,
    NotSquare,
    ZeroPolynomial,
    NotHomogeneous,
    BudgetExceeded,
    UnitIdeal,
    NotCoprime,
    DegreeMismatch,
    NotMinimal,
    AllZero,
    DimensionMismatch,
    ZeroJacobian,
    BadRange,
    DegeneratePattern,
    SingularDeterminant,
    NotJonquieres,
    UnderlyingInverseUnavailable,
    BadUnderlyingInverse,
    TemplateMismatch,
    EntriesNotIndependent,
    UnmixedForD2,
    NotLinearPrime,
    NotDivisible,
    InvalidArgument,
    Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    using Detail = std::pair<std::string, std::int64_t>;

    Error(Errc code, const std::string& message, std::vector<Detail> details = {})
        : std::runtime_error(message), code_(code), details_(std::move(details))
    {
    }

    Errc code() const noexcept { return code_; }
    /// Structured integer payload (positions, offending degrees, ...).
    const std::vector<Detail>& details() const noexcept { return details_; }

private:
    Errc code_;
    std::vector<Detail> details_;
};

/// Parse failure with a location. Columns and lines are 1-based; line is 0
/// when the text did not come from a file.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t line, std::size_t column, std::string expected)
        : Error(Errc::SyntaxError, message,
                {{"line", static_cast<std::int64_t>(line)}, {"column", static_cast<std::int64_t>(column)}}),
          line_(line), column_(column), expected_(std::move(expected))
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message, std::vector<Error::Detail> details = {})
{
    throw Error(code, message, std::move(details));
}

} // namespace jonq
