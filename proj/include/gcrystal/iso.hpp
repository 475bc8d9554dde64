#ifndef GCRYSTAL_ISO_HPP
#define GCRYSTAL_ISO_HPP

// Bijection between the tropical chart Z^(k k') and B^{k,inf}, and the
// correspondence between c-tuples and full paths on L1.

#include "gcrystal/bkinf.hpp"
#include "gcrystal/lattice.hpp"
#include "gcrystal/paths.hpp"

namespace gcrystal {

/// b_ji = x_(k-j+1)^(i) - x_(k-j+1)^(i-1), off-lattice reads 0.
inline BElement omega(const TropPoint& x)
{
    const Shape& s = x.shape();
    BElement b{s};
    for (int j = 1; j <= s.k(); ++j) {
        const int l = s.k() - j + 1;
        for (int i = j; i <= j + s.kprime(); ++i) {
            b.add(j, i, x.get(l, i) - x.get(l, i - 1));
        }
    }
    return b;
}

/// x_l^(m) = b_(j,j) + ... + b_(j,m) with j = k - l + 1.
inline TropPoint omega_inv(const BElement& b)
{
    const Shape& s = b.shape();
    TropPoint x{s};
    for (const auto& [l, m] : s.nodes(Side::L1)) {
        const int j = s.k() - l + 1;
        std::int64_t acc = 0;
        for (int i = j; i <= m; ++i) {
            acc += b.get(j, i);
        }
        x.set(l, m, acc);
    }
    return x;
}

/// Full path whose j-th horizontal run lies on row k-j+1 from column c_(j-1) to c_j - 1.
inline Path pi_correspondence(const Shape& shape, const CTuple& c)
{
    if (!valid_ctuple(shape, c)) {
        throw ValidationError("invalid c-tuple");
    }
    Path p;
    for (int j = 1; j <= shape.k(); ++j) {
        const int l = shape.k() - j + 1;
        for (int m = c[static_cast<std::size_t>(j - 1)]; m < c[static_cast<std::size_t>(j)]; ++m) {
            p.points.push_back({l, m});
        }
    }
    return p;
}

} // namespace gcrystal

#endif
