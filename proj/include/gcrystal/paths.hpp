#ifndef GCRYSTAL_PATHS_HPP
#define GCRYSTAL_PATHS_HPP

// Shortest-path weight sums on the two weighted lattices, generic over the
// semiring: (+, *) for rational points and (max, +) for tropical ones.
//
// On L1 a horizontal strip (l,m)-(l,m+1) weighs x_l^(m) / x_l^(m+1) and a
// vertical strip (l,m)-(l-1,m+1) weighs 1. On L2 horizontal strips weigh 1 and
// a vertical strip (l,m)-(l-1,m+1) weighs y_(l-1)^(m+1) / y_l^(m).

#include "gcrystal/lattice.hpp"
#include "gcrystal/semiring.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace gcrystal {

/// A monotone shortest lattice path; each step is (l,m)->(l,m+1) or (l,m)->(l-1,m+1).
struct Path {
    std::vector<Coord> points;

    friend bool operator==(const Path&, const Path&) = default;
};

/// Source and sink of the full paths P_i[n,k].
inline Coord full_source(const Shape& shape, Side side) { return {shape.k(), side == Side::L1 ? 1 : 0}; }
inline Coord full_sink(const Shape& shape, Side side)
{
    return {1, side == Side::L1 ? shape.n() : shape.n() - 1};
}

inline constexpr std::uint64_t max_enumerated_paths = 100000;

/// Every monotone shortest path from src to dst that stays on the lattice.
/// Empty when dst is not reachable from src.
inline std::vector<Path> enumerate_paths(const Shape& shape, Side side, Coord src, Coord dst)
{
    if (!shape.contains(side, src) || !shape.contains(side, dst)) {
        throw ValidationError("path endpoints must be lattice nodes");
    }
    const int steps = dst.m - src.m;
    const int down = src.l - dst.l;
    if (steps < 0 || down < 0 || down > steps) {
        return {};
    }
    if (binomial(steps, down) > max_enumerated_paths) {
        throw ValidationError("path enumeration exceeds the " + std::to_string(max_enumerated_paths) + " path cap");
    }

    std::vector<Path> out;
    Path current{{src}};
    auto walk = [&](auto&& self, Coord at) -> void {
        if (at == dst) {
            out.push_back(current);
            return;
        }
        const Coord next[2] = {{at.l, at.m + 1}, {at.l - 1, at.m + 1}};
        for (const auto& c : next) {
            if (!shape.contains(side, c)) {
                continue;
            }
            const int rem_steps = dst.m - c.m;
            const int rem_down = c.l - dst.l;
            if (rem_down < 0 || rem_down > rem_steps) {
                continue;
            }
            current.points.push_back(c);
            self(self, c);
            current.points.pop_back();
        }
    };
    walk(walk, src);
    return out;
}

/// Weight of a single strip between consecutive path points.
template <class P>
typename semiring_for_t<typename P::value_type>::value_type strip_weight(const P& pt, Coord from, Coord to)
{
    using S = semiring_for_t<typename P::value_type>;
    const bool horizontal = to.l == from.l && to.m == from.m + 1;
    const bool vertical = to.l == from.l - 1 && to.m == from.m + 1;
    if (!horizontal && !vertical) {
        throw ValidationError("consecutive path points " + to_string(from) + " and " + to_string(to) +
                              " are not a lattice step");
    }
    if constexpr (P::side == Side::L1) {
        return horizontal ? S::ratio(pt.get(from), pt.get(to)) : S::one();
    } else {
        return vertical ? S::ratio(pt.get(to), pt.get(from)) : S::one();
    }
}

/// Semiring product of strip weights along p.
template <class P>
typename semiring_for_t<typename P::value_type>::value_type path_weight(const P& pt, const Path& p)
{
    using S = semiring_for_t<typename P::value_type>;
    for (const auto& c : p.points) {
        if (!pt.contains(c.l, c.m)) {
            throw ValidationError("path node " + to_string(c) + " is not on the point's lattice");
        }
    }
    auto w = S::one();
    for (std::size_t s = 1; s < p.points.size(); ++s) {
        w = S::mul(w, strip_weight(pt, p.points[s - 1], p.points[s]));
    }
    return w;
}

enum class SumKind { X, Xstar, Y, Ystar };

/// Dynamic-programming tables of partial path sums for one point.
///
/// On L1 this holds X (paths from a node to the sink) and X* (paths from the
/// source to a node), plus the region sums U/V/R; on L2 it holds Y and Y*.
/// Tables are filled once at construction; the point is immutable.
template <class P>
class PathTables {
public:
    using S = semiring_for_t<typename P::value_type>;
    using value_type = typename S::value_type;
    static constexpr Side side = P::side;

    explicit PathTables(const P& pt) : pt_(pt), shape_(pt.shape())
    {
        const auto size = static_cast<std::size_t>(shape_.size());
        to_sink_.assign(size, S::zero());
        from_source_.assign(size, S::zero());
        const int k = shape_.k();
        const Coord src = full_source(shape_, side);
        const Coord dst = full_sink(shape_, side);

        // Sums to the sink: rows bottom-up, columns right-to-left.
        for (int l = 1; l <= k; ++l) {
            for (int m = shape_.m_end(side, l) - 1; m >= shape_.m_begin(side, l); --m) {
                value_type acc = (Coord{l, m} == dst) ? S::one() : S::zero();
                const Coord right{l, m + 1};
                const Coord down{l - 1, m + 1};
                if (shape_.contains(side, right)) {
                    acc = S::add(acc, S::mul(strip_weight(pt_, {l, m}, right), to_sink(right)));
                }
                if (shape_.contains(side, down)) {
                    acc = S::add(acc, S::mul(strip_weight(pt_, {l, m}, down), to_sink(down)));
                }
                to_sink_[idx(l, m)] = acc;
            }
        }
        // Sums from the source: rows top-down, columns left-to-right.
        for (int l = k; l >= 1; --l) {
            for (int m = shape_.m_begin(side, l); m < shape_.m_end(side, l); ++m) {
                value_type acc = (Coord{l, m} == src) ? S::one() : S::zero();
                const Coord left{l, m - 1};
                const Coord up{l + 1, m - 1};
                if (shape_.contains(side, left)) {
                    acc = S::add(acc, S::mul(from_source(left), strip_weight(pt_, left, {l, m})));
                }
                if (shape_.contains(side, up)) {
                    acc = S::add(acc, S::mul(from_source(up), strip_weight(pt_, up, {l, m})));
                }
                from_source_[idx(l, m)] = acc;
            }
        }
    }

    const P& point() const noexcept { return pt_; }
    const Shape& shape() const noexcept { return shape_; }

    /// Sum over all full paths: epsilon(x) on L1, E_2(y) on L2.
    value_type total() const { return to_sink(full_source(shape_, side)); }

    // -- L1 ------------------------------------------------------------------

    /// X_l^m with the boundary conventions: 1 when l > k, 1/x_1^(n) when l + m = k.
    value_type X(int l, int m) const
        requires(P::side == Side::L1)
    {
        if (shape_.contains(side, l, m)) {
            return to_sink({l, m});
        }
        if (l > shape_.k()) {
            return S::one();
        }
        if (l >= 0 && l + m == shape_.k()) {
            return S::inverse(pt_.get(1, shape_.n()));
        }
        throw ValidationError("X_l^m undefined at (" + std::to_string(l) + "," + std::to_string(m) + ")");
    }

    value_type Xstar(int l, int m) const
        requires(P::side == Side::L1)
    {
        if (!shape_.contains(side, l, m)) {
            throw ValidationError("X*_l^m undefined at (" + std::to_string(l) + "," + std::to_string(m) + ")");
        }
        return from_source({l, m});
    }

    /// Sum over full paths through (l, m); bottom when (l, m) is off the lattice.
    value_type R(int l, int m) const
        requires(P::side == Side::L1)
    {
        if (!shape_.contains(side, l, m)) {
            return S::zero();
        }
        return S::mul(from_source({l, m}), to_sink({l, m}));
    }

    /// Sum over full paths whose row-l nodes all have m' > m (vacuous outside rows 1..k).
    value_type U(int l, int m) const
        requires(P::side == Side::L1)
    {
        const int k = shape_.k();
        if (l < 1 || l > k) {
            return total();
        }
        if (l == k) {
            // Every path enters row k at (k, 1).
            return 1 > m ? total() : S::zero();
        }
        // Paths entering row l by the vertical strip (l+1, j-1)-(l, j).
        value_type acc = S::zero();
        for (int j = std::max(m + 1, shape_.m_begin(side, l)); j < shape_.m_end(side, l); ++j) {
            if (shape_.contains(side, l + 1, j - 1)) {
                acc = S::add(acc, S::mul(from_source({l + 1, j - 1}), to_sink({l, j})));
            }
        }
        return acc;
    }

    /// Sum over full paths whose row-l nodes all have m' < m (vacuous outside rows 1..k).
    value_type V(int l, int m) const
        requires(P::side == Side::L1)
    {
        if (l < 1 || l > shape_.k()) {
            return total();
        }
        if (l == 1) {
            // Every path leaves row 1 at the sink (1, n).
            return shape_.n() < m ? total() : S::zero();
        }
        // Paths leaving row l by the vertical strip (l, j)-(l-1, j+1).
        value_type acc = S::zero();
        const int last = std::min(m - 1, shape_.m_end(side, l) - 1);
        for (int j = shape_.m_begin(side, l); j <= last; ++j) {
            if (shape_.contains(side, l - 1, j + 1)) {
                acc = S::add(acc, S::mul(from_source({l, j}), to_sink({l - 1, j + 1})));
            }
        }
        return acc;
    }

    // -- L2 ------------------------------------------------------------------

    value_type Y(int l, int m) const
        requires(P::side == Side::L2)
    {
        if (!shape_.contains(side, l, m)) {
            throw ValidationError("Y_l^m undefined at (" + std::to_string(l) + "," + std::to_string(m) + ")");
        }
        return to_sink({l, m});
    }

    /// Y*_l^m with the boundary conventions: 1/y_k^(0) when l = 0, 1 when l + m = n + 1.
    value_type Ystar(int l, int m) const
        requires(P::side == Side::L2)
    {
        if (shape_.contains(side, l, m)) {
            return from_source({l, m});
        }
        if (l == 0) {
            return S::inverse(pt_.get(shape_.k(), 0));
        }
        if (l >= 1 && l <= shape_.k() && l + m == shape_.n() + 1) {
            return S::one();
        }
        throw ValidationError("Y*_l^m undefined at (" + std::to_string(l) + "," + std::to_string(m) + ")");
    }

private:
    std::size_t idx(int l, int m) const { return static_cast<std::size_t>(shape_.index(side, l, m)); }
    const value_type& to_sink(Coord c) const { return to_sink_[idx(c.l, c.m)]; }
    const value_type& from_source(Coord c) const { return from_source_[idx(c.l, c.m)]; }

    P pt_;
    Shape shape_;
    std::vector<value_type> to_sink_;
    std::vector<value_type> from_source_;
};

template <class P>
PathTables<P> path_tables(const P& pt)
{
    return PathTables<P>{pt};
}

/// One-shot partial sum; prefer PathTables when querying many nodes.
template <class P>
auto partial_sum(const P& pt, SumKind kind, int l, int m)
{
    const PathTables<P> t{pt};
    if constexpr (P::side == Side::L1) {
        switch (kind) {
        case SumKind::X:
            return t.X(l, m);
        case SumKind::Xstar:
            return t.Xstar(l, m);
        default:
            throw ValidationError("Y-type partial sums need a point on L2");
        }
    } else {
        switch (kind) {
        case SumKind::Y:
            return t.Y(l, m);
        case SumKind::Ystar:
            return t.Ystar(l, m);
        default:
            throw ValidationError("X-type partial sums need a point on L1");
        }
    }
}

/// epsilon(x): the sum over all full paths on L1.
template <class P>
    requires(P::side == Side::L1)
auto epsilon_total(const P& x)
{
    return PathTables<P>{x}.total();
}

/// Sums over the paths above, below and through one node.
template <class V>
struct RegionSums {
    V above;
    V below;
    V through;
};

template <class P>
    requires(P::side == Side::L1)
auto region_sums(const P& x, int l, int m)
{
    const PathTables<P> t{x};
    return RegionSums<typename PathTables<P>::value_type>{t.U(l, m), t.V(l, m), t.R(l, m)};
}

// ---------------------------------------------------------------------------
// Brute-force oracle: explicit enumeration of paths. Independent of the DP.

namespace oracle {

template <class P>
auto sum_over(const P& pt, const std::vector<Path>& paths)
{
    using S = semiring_for_t<typename P::value_type>;
    auto acc = S::zero();
    for (const auto& p : paths) {
        acc = S::add(acc, path_weight(pt, p));
    }
    return acc;
}

/// Partial sums by enumeration. Boundary conventions are not applied here:
/// (l, m) must be a lattice node.
template <class P>
auto partial_sum(const P& pt, SumKind kind, int l, int m)
{
    const Shape& shape = pt.shape();
    const Side side = P::side;
    const bool to_sink = kind == SumKind::X || kind == SumKind::Y;
    const Coord node{l, m};
    return to_sink ? sum_over(pt, enumerate_paths(shape, side, node, full_sink(shape, side)))
                   : sum_over(pt, enumerate_paths(shape, side, full_source(shape, side), node));
}

inline std::vector<Path> full_paths(const Shape& shape, Side side)
{
    return enumerate_paths(shape, side, full_source(shape, side), full_sink(shape, side));
}

enum class Region { above, below, through };

inline bool in_region(const Path& p, Region region, int l, int m)
{
    if (region == Region::through) {
        return std::find(p.points.begin(), p.points.end(), Coord{l, m}) != p.points.end();
    }
    // Above/below hold vacuously when p has no node on row l.
    return std::all_of(p.points.begin(), p.points.end(), [&](const Coord& c) {
        return c.l != l || (region == Region::above ? c.m > m : c.m < m);
    });
}

template <class P>
    requires(P::side == Side::L1)
auto region_sum(const P& x, Region region, int l, int m)
{
    std::vector<Path> selected;
    for (auto& p : full_paths(x.shape(), Side::L1)) {
        if (in_region(p, region, l, m)) {
            selected.push_back(std::move(p));
        }
    }
    return sum_over(x, selected);
}

} // namespace oracle

} // namespace gcrystal

#endif
