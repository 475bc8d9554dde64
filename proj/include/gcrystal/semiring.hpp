#ifndef GCRYSTAL_SEMIRING_HPP
#define GCRYSTAL_SEMIRING_HPP

#include "gcrystal/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

namespace gcrystal {

/// (+, *, 1, 0) over exact rationals.
struct RationalSemiring {
    using value_type = Rational;
    using coord_type = Rational;

    static value_type zero() { return Rational{0}; }
    static value_type one() { return Rational{1}; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type lift(const coord_type& a) { return a; }
    /// Image of the coordinate ratio a / b.
    static value_type ratio(const coord_type& a, const coord_type& b) { return a / b; }
    static value_type inverse(const coord_type& a) { return Rational{1} / a; }
};

/// Max-plus value; std::nullopt stands for -infinity.
using MaxPlus = std::optional<std::int64_t>;

/// (max, +, 0, -inf) over integers: the ultra-discretization of RationalSemiring.
struct MaxPlusSemiring {
    using value_type = MaxPlus;
    using coord_type = std::int64_t;

    static value_type zero() { return std::nullopt; }
    static value_type one() { return std::int64_t{0}; }
    static value_type add(const value_type& a, const value_type& b)
    {
        if (!a) {
            return b;
        }
        if (!b) {
            return a;
        }
        return std::max(*a, *b);
    }
    static value_type mul(const value_type& a, const value_type& b)
    {
        if (!a || !b) {
            return std::nullopt;
        }
        return *a + *b;
    }
    static value_type lift(coord_type a) { return a; }
    static value_type ratio(coord_type a, coord_type b) { return a - b; }
    static value_type inverse(coord_type a) { return -a; }
};

inline std::string to_string(const MaxPlus& v) { return v ? std::to_string(*v) : std::string{"-inf"}; }

template <class V>
struct semiring_for;

template <>
struct semiring_for<Rational> {
    using type = RationalSemiring;
};

template <>
struct semiring_for<std::int64_t> {
    using type = MaxPlusSemiring;
};

template <class V>
using semiring_for_t = typename semiring_for<V>::type;

} // namespace gcrystal

#endif
