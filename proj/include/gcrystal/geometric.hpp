#ifndef GCRYSTAL_GEOMETRIC_HPP
#define GCRYSTAL_GEOMETRIC_HPP

// Geometric crystal data on the x-chart (indices 1..n, plus the 0-structure)
// and on the y-chart (indices 0..n-1), and the birational Weyl action.

#include "gcrystal/birational.hpp"
#include "gcrystal/cartan.hpp"
#include "gcrystal/lattice.hpp"
#include "gcrystal/paths.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gcrystal {

/// Inclusive row range [lo, hi] touched by the index-i operators.
struct RowRange {
    int lo;
    int hi;
};

/// x-chart: [max(k-i+1, 1), min(k, n-i+1)]; y-chart: [max(k-i, 1), min(k, n-i)].
template <Side S>
RowRange crystal_rows(const Shape& shape, int i)
{
    const int n = shape.n();
    const int k = shape.k();
    if constexpr (S == Side::L1) {
        if (i < 1 || i > n) {
            throw ValidationError("x-chart index must lie in 1..n, got " + std::to_string(i));
        }
        return {std::max(k - i + 1, 1), std::min(k, n - i + 1)};
    } else {
        if (i < 0 || i > n - 1) {
            throw ValidationError("y-chart index must lie in 0..n-1, got " + std::to_string(i));
        }
        return {std::max(k - i, 1), std::min(k, n - i)};
    }
}

namespace detail {

/// Shared by both charts: p_l^(i) (p_(l+1)^(i)...p_hi^(i))^2 over
/// (p_(l+1)^(i-1)...p_(hi+1)^(i-1)) (p_l^(i+1)...p_hi^(i+1)); off-lattice reads are 1.
template <Side S>
Rational chain_ratio(const LatticePoint<Rational, S>& p, RowRange r, int l, int i)
{
    if (l < r.lo || l > r.hi) {
        throw ValidationError("row " + std::to_string(l) + " outside [" + std::to_string(r.lo) + "," +
                              std::to_string(r.hi) + "]");
    }
    Rational num = p.get(l, i);
    Rational den{1};
    for (int j = l + 1; j <= r.hi; ++j) {
        num *= p.get(j, i) * p.get(j, i);
    }
    for (int j = l + 1; j <= r.hi + 1; ++j) {
        den *= p.get(j, i - 1);
    }
    for (int j = l; j <= r.hi; ++j) {
        den *= p.get(j, i + 1);
    }
    return num / den;
}

template <Side S>
Rational chain_gamma(const LatticePoint<Rational, S>& p, RowRange r, int i)
{
    return chain_ratio(p, r, r.lo, i) * p.get(r.lo, i) / (p.get(r.lo, i - 1) * p.get(r.lo - 1, i + 1));
}

template <Side S>
Rational chain_epsilon(const LatticePoint<Rational, S>& p, RowRange r, int i)
{
    Rational acc{0};
    for (int l = r.lo; l <= r.hi; ++l) {
        acc += 1 / chain_ratio(p, r, l, i);
    }
    return acc;
}

/// Rescales column i by ratios of partial sums of 1/ratio, with c on the tail.
template <Side S>
LatticePoint<Rational, S> chain_act(const LatticePoint<Rational, S>& p, RowRange r, int i, const Rational& c)
{
    if (!(c > 0)) {
        throw ValidationError("c must be positive");
    }
    std::vector<Rational> inv;
    for (int l = r.lo; l <= r.hi; ++l) {
        inv.push_back(1 / chain_ratio(p, r, l, i));
    }
    // prefix[t] = sum of inv[0..t-1], left to right
    std::vector<Rational> prefix(inv.size() + 1, Rational{0});
    for (std::size_t t = 0; t < inv.size(); ++t) {
        prefix[t + 1] = prefix[t] + inv[t];
    }
    const Rational& total = prefix.back();
    LatticePoint<Rational, S> out = p;
    for (int l = r.lo; l <= r.hi; ++l) {
        const auto t = static_cast<std::size_t>(l - r.lo);
        const Rational num = prefix[t] + c * (total - prefix[t]);
        const Rational den = prefix[t + 1] + c * (total - prefix[t + 1]);
        out.set(l, i, p.get(l, i) * num / den);
    }
    return out;
}

inline void check_index(const Shape& shape, int i)
{
    if (i < 0 || i > shape.n()) {
        throw ValidationError("index must lie in 0.." + std::to_string(shape.n()) + ", got " + std::to_string(i));
    }
}

} // namespace detail

// -- x-chart -----------------------------------------------------------------

inline Rational dval(const XPoint& x, int l, int i)
{
    return detail::chain_ratio(x, crystal_rows<Side::L1>(x.shape(), i), l, i);
}

inline Rational gamma(const XPoint& x, int i)
{
    detail::check_index(x.shape(), i);
    if (i == 0) {
        return 1 / (x.get(1, x.shape().n()) * x.get(x.shape().k(), 1));
    }
    return detail::chain_gamma(x, crystal_rows<Side::L1>(x.shape(), i), i);
}

inline Rational epsilon(const XPoint& x, int i)
{
    detail::check_index(x.shape(), i);
    if (i == 0) {
        return x.get(1, x.shape().n()) * epsilon_total(x);
    }
    return detail::chain_epsilon(x, crystal_rows<Side::L1>(x.shape(), i), i);
}

/// alpha_l^m(c) = U_(l-1)^m + c V_l^m.
inline Rational zero_alpha(const PathTables<XPoint>& t, int l, int m, const Rational& c)
{
    return t.U(l - 1, m) + c * t.V(l, m);
}

/// e_0^c in closed form via the region sums U, V.
inline XPoint act_e0(const XPoint& x, const Rational& c)
{
    if (!(c > 0)) {
        throw ValidationError("c must be positive");
    }
    const Shape& shape = x.shape();
    const PathTables<XPoint> t{x};
    XPoint out{shape};
    for (const auto& [l, m] : shape.nodes(Side::L1)) {
        if (l == 1 && m == shape.n()) {
            out.set(l, m, x.get(l, m) / c);
        } else {
            out.set(l, m, x.get(l, m) * zero_alpha(t, l, m, c) / zero_alpha(t, l + 1, m, c));
        }
    }
    return out;
}

inline XPoint act_e(const XPoint& x, int i, const Rational& c)
{
    detail::check_index(x.shape(), i);
    if (i == 0) {
        return act_e0(x, c);
    }
    return detail::chain_act(x, crystal_rows<Side::L1>(x.shape(), i), i, c);
}

// -- y-chart -----------------------------------------------------------------

inline Rational dval_bar(const YPoint& y, int l, int i)
{
    return detail::chain_ratio(y, crystal_rows<Side::L2>(y.shape(), i), l, i);
}

inline Rational gamma_bar(const YPoint& y, int i)
{
    return detail::chain_gamma(y, crystal_rows<Side::L2>(y.shape(), i), i);
}

inline Rational epsilon_bar(const YPoint& y, int i)
{
    return detail::chain_epsilon(y, crystal_rows<Side::L2>(y.shape(), i), i);
}

inline YPoint act_ebar(const YPoint& y, int i, const Rational& c)
{
    return detail::chain_act(y, crystal_rows<Side::L2>(y.shape(), i), i, c);
}

/// The chart change carrying the crystal morphism from the x-chart to the y-chart.
inline YPoint sigma_bar(const XPoint& x) { return sigma_map(x); }
inline XPoint sigma_bar_inv(const YPoint& y) { return xi_map(y); }

/// e_0^c by conjugating the y-chart operator through the chart change.
inline XPoint act_e0_via_sigma(const XPoint& x, const Rational& c)
{
    return xi_map(act_ebar(sigma_map(x), 0, c));
}

inline Rational gamma0_via_sigma(const XPoint& x) { return gamma_bar(sigma_map(x), 0); }
inline Rational epsilon0_via_sigma(const XPoint& x) { return epsilon_bar(sigma_map(x), 0); }

// -- Weyl group ----------------------------------------------------------------

/// Definitional reflection: e_i^(1/gamma_i).
inline XPoint weyl_s_definition(const XPoint& x, int i) { return act_e(x, i, 1 / gamma(x, i)); }

/// Closed-form weight x_p^(i) (x_lo^(i)...x_(p-1)^(i))^2 over
/// (x_lo^(i-1)...x_p^(i-1)) (x_(lo-1)^(i+1)...x_(p-1)^(i+1)); equals gamma_i / D_p^(i).
inline Rational weyl_weight(const XPoint& x, int p, int i)
{
    const RowRange r = crystal_rows<Side::L1>(x.shape(), i);
    Rational num = x.get(p, i);
    Rational den{1};
    for (int j = r.lo; j <= p - 1; ++j) {
        num *= x.get(j, i) * x.get(j, i);
    }
    for (int j = r.lo; j <= p; ++j) {
        den *= x.get(j, i - 1);
    }
    for (int j = r.lo - 1; j <= p - 1; ++j) {
        den *= x.get(j, i + 1);
    }
    return num / den;
}

/// Closed-form reflection s_i.
inline XPoint weyl_s(const XPoint& x, int i)
{
    const Shape& shape = x.shape();
    detail::check_index(shape, i);
    if (i == 0) {
        const PathTables<XPoint> t{x};
        const Rational c = x.get(1, shape.n()) * x.get(shape.k(), 1);
        XPoint out{shape};
        for (const auto& [l, m] : shape.nodes(Side::L1)) {
            if (l == 1 && m == shape.n()) {
                out.set(l, m, 1 / x.get(shape.k(), 1));
            } else {
                out.set(l, m, x.get(l, m) * (t.U(l - 1, m) + c * t.V(l, m)) / (t.U(l, m) + c * t.V(l + 1, m)));
            }
        }
        return out;
    }
    const RowRange r = crystal_rows<Side::L1>(shape, i);
    std::vector<Rational> head;
    std::vector<Rational> tail;
    for (int p = r.lo; p <= r.hi; ++p) {
        head.push_back(weyl_weight(x, p, i));
        tail.push_back(1 / dval(x, p, i));
    }
    XPoint out = x;
    for (int l = r.lo; l <= r.hi; ++l) {
        Rational num{0};
        Rational den{0};
        for (int p = r.lo; p <= r.hi; ++p) {
            const auto t = static_cast<std::size_t>(p - r.lo);
            num += p < l ? head[t] : tail[t];
            den += p <= l ? head[t] : tail[t];
        }
        out.set(l, i, x.get(l, i) * num / den);
    }
    return out;
}

} // namespace gcrystal

#endif
