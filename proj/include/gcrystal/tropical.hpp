#ifndef GCRYSTAL_TROPICAL_HPP
#define GCRYSTAL_TROPICAL_HPP

// Piecewise-linear crystal on Z^(k k'): closed forms obtained by the rules
// x*y -> x+y, x/y -> x-y, x+y -> max(x,y), plus a large-base degree probe
// that evaluates the rational counterparts at powers of t = 2^128.

#include "gcrystal/geometric.hpp"
#include "gcrystal/lattice.hpp"
#include "gcrystal/paths.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcrystal {

using TropInt = std::int64_t;

namespace detail {

inline TropInt column_sum(const TropPoint& x, int from, int to, int m)
{
    TropInt acc = 0;
    for (int j = from; j <= to; ++j) {
        acc += x.get(j, m);
    }
    return acc;
}

inline void check_trop_index(const Shape& shape, int i)
{
    if (i < 0 || i > shape.n()) {
        throw ValidationError("index must lie in 0.." + std::to_string(shape.n()) + ", got " + std::to_string(i));
    }
}

inline TropInt value_of(const MaxPlus& v)
{
    if (!v) {
        throw DomainFault("max over an empty path set where a path is required");
    }
    return *v;
}

} // namespace detail

/// Negated tropical image of the chain ratio D_l^(i).
inline TropInt trop_dbar(const TropPoint& x, int l, int i)
{
    const RowRange r = crystal_rows<Side::L1>(x.shape(), i);
    if (l < r.lo || l > r.hi) {
        throw ValidationError("row " + std::to_string(l) + " outside [" + std::to_string(r.lo) + "," +
                              std::to_string(r.hi) + "]");
    }
    return -x.get(l, i) - 2 * detail::column_sum(x, l + 1, r.hi, i) + detail::column_sum(x, l + 1, r.hi + 1, i - 1) +
           detail::column_sum(x, l, r.hi, i + 1);
}

inline TropInt trop_wt(const TropPoint& x, int i)
{
    const Shape& shape = x.shape();
    detail::check_trop_index(shape, i);
    if (i == 0) {
        return -x.get(1, shape.n()) - x.get(shape.k(), 1);
    }
    const RowRange r = crystal_rows<Side::L1>(shape, i);
    return 2 * detail::column_sum(x, r.lo, r.hi, i) - detail::column_sum(x, r.lo, r.hi + 1, i - 1) -
           detail::column_sum(x, r.lo - 1, r.hi, i + 1);
}

inline TropInt trop_eps(const TropPoint& x, int i)
{
    const Shape& shape = x.shape();
    detail::check_trop_index(shape, i);
    if (i == 0) {
        return x.get(1, shape.n()) + detail::value_of(epsilon_total(x));
    }
    const RowRange r = crystal_rows<Side::L1>(shape, i);
    TropInt best = trop_dbar(x, r.lo, i);
    for (int l = r.lo + 1; l <= r.hi; ++l) {
        best = std::max(best, trop_dbar(x, l, i));
    }
    return best;
}

/// Tropical e_i^d for any integer d.
inline TropPoint trop_e(const TropPoint& x, int i, TropInt d)
{
    const Shape& shape = x.shape();
    detail::check_trop_index(shape, i);
    using S = MaxPlusSemiring;
    const MaxPlus shift = d;
    if (i == 0) {
        const PathTables<TropPoint> t{x};
        TropPoint out{shape};
        for (const auto& [l, m] : shape.nodes(Side::L1)) {
            if (l == 1 && m == shape.n()) {
                out.set(l, m, x.get(l, m) - d);
                continue;
            }
            const auto top = S::add(t.U(l - 1, m), S::mul(shift, t.V(l, m)));
            const auto bottom = S::add(t.U(l, m), S::mul(shift, t.V(l + 1, m)));
            out.set(l, m, x.get(l, m) + detail::value_of(top) - detail::value_of(bottom));
        }
        return out;
    }
    const RowRange r = crystal_rows<Side::L1>(shape, i);
    std::vector<TropInt> dbar;
    for (int p = r.lo; p <= r.hi; ++p) {
        dbar.push_back(trop_dbar(x, p, i));
    }
    auto at = [&](int p) { return MaxPlus{dbar[static_cast<std::size_t>(p - r.lo)]}; };
    TropPoint out = x;
    for (int l = r.lo; l <= r.hi; ++l) {
        MaxPlus top = S::zero();
        MaxPlus bottom = S::zero();
        for (int p = r.lo; p <= r.hi; ++p) {
            top = S::add(top, p < l ? at(p) : S::mul(shift, at(p)));
            bottom = S::add(bottom, p <= l ? at(p) : S::mul(shift, at(p)));
        }
        out.set(l, i, x.get(l, i) + detail::value_of(top) - detail::value_of(bottom));
    }
    return out;
}

/// Tropical reflection: e_i^(-wt_i).
inline TropPoint trop_weyl(const TropPoint& x, int i) { return trop_e(x, i, -trop_wt(x, i)); }

// ---------------------------------------------------------------------------
// Degree probe

/// A rational quantity whose tropical counterpart has a closed form.
struct UdQuantity {
    enum class Kind { gamma, epsilon, e_coord };
    Kind kind = Kind::gamma;
    int i = 0;
    /// Coordinate read after e_i^c, used only by e_coord.
    Coord at{};
};

inline constexpr int ud_probe_log2_base = 128;
inline constexpr int ud_probe_max_exponent = 8;
inline constexpr std::uint64_t ud_probe_max_paths = 70;

namespace detail {

inline Rational power_of_base(TropInt e)
{
    Rational out{1};
    mpz_class big{1};
    mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), static_cast<mp_bitcnt_t>(ud_probe_log2_base * (e < 0 ? -e : e)));
    if (e >= 0) {
        out = Rational{big};
    } else {
        out = Rational{mpz_class{1}, big};
    }
    out.canonicalize();
    return out;
}

/// round(log_t(q)) for positive q, from bit lengths.
inline TropInt base_degree(const Rational& q)
{
    if (!(q > 0)) {
        throw DomainFault("degree probe on a non-positive value");
    }
    const auto bits = [](const mpz_class& z) {
        return static_cast<TropInt>(mpz_sizeinbase(z.get_mpz_t(), 2));
    };
    const TropInt diff = bits(q.get_num()) - bits(q.get_den());
    const TropInt base = ud_probe_log2_base;
    // nearest multiple of the base exponent
    const TropInt shifted = diff + base / 2;
    return shifted >= 0 ? shifted / base : -((-shifted + base - 1) / base);
}

} // namespace detail

/// The rational counterpart evaluated at x_l^(m) = t^(exponent), c = t^d, as a base-t degree.
inline TropInt ud_degree_probe(const UdQuantity& q, const TropPoint& exponents, TropInt d)
{
    const Shape& shape = exponents.shape();
    if (binomial(shape.n() - 1, shape.k() - 1) > ud_probe_max_paths) {
        throw ValidationError("degree probe needs at most " + std::to_string(ud_probe_max_paths) + " paths");
    }
    for (const auto& e : exponents.entries()) {
        if (e < -ud_probe_max_exponent || e > ud_probe_max_exponent) {
            throw ValidationError("degree probe exponents must lie in [-8, 8]");
        }
    }
    if (d < -ud_probe_max_exponent || d > ud_probe_max_exponent) {
        throw ValidationError("degree probe shift must lie in [-8, 8]");
    }
    XPoint x{shape};
    for (const auto& [l, m] : shape.nodes(Side::L1)) {
        x.set(l, m, detail::power_of_base(exponents.get(l, m)));
    }
    switch (q.kind) {
    case UdQuantity::Kind::gamma:
        return detail::base_degree(gamma(x, q.i));
    case UdQuantity::Kind::epsilon:
        return detail::base_degree(epsilon(x, q.i));
    case UdQuantity::Kind::e_coord: {
        if (!shape.contains(Side::L1, q.at)) {
            throw ValidationError("probe coordinate " + to_string(q.at) + " is not a lattice node");
        }
        return detail::base_degree(act_e(x, q.i, detail::power_of_base(d)).get(q.at));
    }
    }
    throw ValidationError("unknown probe quantity");
}

/// Tropical closed form matching a probe quantity.
inline TropInt ud_closed_form(const UdQuantity& q, const TropPoint& x, TropInt d)
{
    switch (q.kind) {
    case UdQuantity::Kind::gamma:
        return trop_wt(x, q.i);
    case UdQuantity::Kind::epsilon:
        return trop_eps(x, q.i);
    case UdQuantity::Kind::e_coord:
        return trop_e(x, q.i, d).get(q.at);
    }
    throw ValidationError("unknown probe quantity");
}

} // namespace gcrystal

#endif
