#ifndef GCRYSTAL_RATIONAL_HPP
#define GCRYSTAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcrystal {

/// Exact rational scalar used for every geometric-side computation.
using Rational = mpq_class;

/// Thrown when arguments violate a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails on valid input.
class DomainFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    Rational q{mpz_class{static_cast<long>(num)}, mpz_class{static_cast<long>(den)}};
    q.canonicalize();
    return q;
}

/// Formats as "p/q" in lowest terms; the denominator is always written.
inline std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p/q" or "p". Rejects zero denominators and trailing garbage.
inline Rational parse_rational(std::string_view text)
{
    auto is_integer = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        std::size_t pos = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (pos == s.size()) {
            return false;
        }
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9') {
                return false;
            }
        }
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
    };

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) {
        throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n{strip_plus(num)};
    mpz_class d{strip_plus(den)};
    if (d == 0) {
        throw ValidationError("rational with zero denominator '" + std::string(text) + "'");
    }
    Rational q{n, d};
    q.canonicalize();
    return q;
}

/// c^e for a small integer exponent.
inline Rational pow(const Rational& c, int e)
{
    Rational base = e >= 0 ? c : Rational{1} / c;
    unsigned long u = static_cast<unsigned long>(e >= 0 ? e : -e);
    Rational out{mpz_class{0}, mpz_class{1}};
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), u);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), u);
    return out;
}

} // namespace gcrystal

#endif
