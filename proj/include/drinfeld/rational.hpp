#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

/// Raised for malformed user input: bad files, unknown labels, dimension
/// mismatches. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

inline bool is_rational_literal(std::string_view text)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    auto digits = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        return pos > start;
    };
    if (!digits())
        return false;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!digits())
            return false;
    }
    return pos == text.size();
}

/// Parses "p", "-p", "p/q". The denominator must be non-zero and unsigned.
inline Scalar parse_scalar(std::string_view text)
{
    if (!is_rational_literal(text))
        throw InputError("not a rational number: \"" + std::string(text) + "\"");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    auto slash = s.find('/');
    if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos)
        throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Scalar q;
    q.set_str(s, 10);
    q.canonicalize();
    return q;
}

/// num/den in lowest terms. Prefer this over Scalar(num, den), which does
/// not reduce and leaves comparisons unreliable.
inline Scalar rational(long num, long den = 1)
{
    if (den == 0)
        throw InputError("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Scalar& q)
{
    return q.get_str(10);
}

inline Scalar abs(const Scalar& q)
{
    return q < 0 ? Scalar(-q) : q;
}

} // namespace drinfeld
