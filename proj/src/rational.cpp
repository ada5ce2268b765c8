// rational.cpp

#include "gshift/rational.hpp"

#include <cctype>

#include "gshift/error.hpp"

namespace gshift {

std::string_view kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::EmptyLanguage: return "EmptyLanguage";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::PropertyDFailed: return "PropertyDFailed";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::ZeroMass: return "ZeroMass";
    case ErrorKind::NotTransitionComplete: return "NotTransitionComplete";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::Unresolvable: return "Unresolvable";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string to_string(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/"
        + boost::multiprecision::denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    BigInt result = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
        result = result * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-result) : result;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw Error(ErrorKind::ParseError, "empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0)
            throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        std::string digits = std::string(text.substr(0, dot)) + std::string(frac);
        if (digits.empty() || digits == "-" || digits == "+")
            throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
        BigInt num = parse_integer(digits, text);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        return Rational(num, den);
    }
    return Rational(parse_integer(text, text));
}

} // namespace gshift
