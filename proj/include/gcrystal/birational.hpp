#ifndef GCRYSTAL_BIRATIONAL_HPP
#define GCRYSTAL_BIRATIONAL_HPP

// The two mutually inverse positive maps between the x-torus on L1 and the
// y-torus on L2. All boundary values come from PathTables.

#include "gcrystal/lattice.hpp"
#include "gcrystal/paths.hpp"

namespace gcrystal {

/// y_l^(m) = x_(l+1)^(m) X_l^m / X_(l+1)^m.
inline YPoint sigma_map(const XPoint& x)
{
    const PathTables<XPoint> t{x};
    YPoint y{x.shape()};
    for (const auto& [l, m] : x.shape().nodes(Side::L2)) {
        y.set(l, m, x.get(l + 1, m) * t.X(l, m) / t.X(l + 1, m));
    }
    return y;
}

/// x_l^(m) = y_l^(m) Y*_(l-1)^m / Y*_l^m.
inline XPoint xi_map(const YPoint& y)
{
    const PathTables<YPoint> t{y};
    XPoint x{y.shape()};
    for (const auto& [l, m] : y.shape().nodes(Side::L1)) {
        x.set(l, m, y.get(l, m) * t.Ystar(l - 1, m) / t.Ystar(l, m));
    }
    return x;
}

} // namespace gcrystal

#endif
