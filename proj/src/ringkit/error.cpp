#include "jonq/error.hpp"

namespace jonq {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::SyntaxError:
        return "SyntaxError";
    case Errc::UnknownVariable:
        return "UnknownVariable";
    case Errc::BadCharacteristic:
        return "BadCharacteristic";
    case Errc::FieldMismatch:
        return "FieldMismatch";
    case Errc::RingMismatch:
        return "RingMismatch";
    case Errc::LengthMismatch:
        return "LengthMismatch";
    case Errc::NotSquare:
        return "NotSquare";
    case Errc::ZeroPolynomial:
        return "ZeroPolynomial";
    case Errc::NotHomogeneous:
        return "NotHomogeneous";
    case Errc::BudgetExceeded:
        return "BudgetExceeded";
    case Errc::UnitIdeal:
        return "UnitIdeal";
    case Errc::NotCoprime:
        return "NotCoprime";
    case Errc::DegreeMismatch:
        return "DegreeMismatch";
    case Errc::NotMinimal:
        return "NotMinimal";
    case Errc::AllZero:
        return "AllZero";
    case Errc::DimensionMismatch:
        return "DimensionMismatch";
    case Errc::ZeroJacobian:
        return "ZeroJacobian";
    case Errc::BadRange:
        return "BadRange";
    case Errc::DegeneratePattern:
        return "DegeneratePattern";
    case Errc::SingularDeterminant:
        return "SingularDeterminant";
    case Errc::NotJonquieres:
        return "NotJonquieres";
    case Errc::UnderlyingInverseUnavailable:
        return "UnderlyingInverseUnavailable";
    case Errc::BadUnderlyingInverse:
        return "BadUnderlyingInverse";
    case Errc::TemplateMismatch:
        return "TemplateMismatch";
    case Errc::EntriesNotIndependent:
        return "EntriesNotIndependent";
    case Errc::UnmixedForD2:
        return "UnmixedForD2";
    case Errc::NotLinearPrime:
        return "NotLinearPrime";
    case Errc::NotDivisible:
        return "NotDivisible";
    case Errc::InvalidArgument:
        return "InvalidArgument";
    case Errc::Internal:
        return "Internal";
    }
    return "Unknown";
}

} // namespace jonq
