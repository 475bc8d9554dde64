#ifndef GCRYSTAL_LATTICE_HPP
#define GCRYSTAL_LATTICE_HPP

#include "gcrystal/rational.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace gcrystal {

/// A lattice node (l, m): l-th horizontal line from the bottom, column l + m - k from the left.
struct Coord {
    int l = 0;
    int m = 0;

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::string to_string(const Coord& c)
{
    return std::to_string(c.l) + "," + std::to_string(c.m);
}

/// Which of the two weighted lattices a point lives on.
enum class Side { L1, L2 };

/// The pair (n, k) of the fundamental representation W(varpi_k) of A_n^(1).
class Shape {
public:
    Shape(int n, int k) : n_(n), k_(k)
    {
        if (n < 2) {
            throw ValidationError("n must be at least 2, got " + std::to_string(n));
        }
        if (k < 1 || k > n) {
            throw ValidationError("k must satisfy 1 <= k <= n, got n=" + std::to_string(n) +
                                  " k=" + std::to_string(k));
        }
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int kprime() const noexcept { return n_ + 1 - k_; }
    int size() const noexcept { return k_ * kprime(); }

    /// Smallest m in row l (1 <= l <= k) of the given lattice.
    int m_begin(Side side, int l) const noexcept { return side == Side::L1 ? k_ - l + 1 : k_ - l; }
    /// One past the largest m in row l.
    int m_end(Side side, int l) const noexcept { return m_begin(side, l) + kprime(); }

    bool contains(Side side, int l, int m) const noexcept
    {
        if (l < 1 || l > k_) {
            return false;
        }
        return side == Side::L1 ? (k_ < l + m && l + m <= n_ + 1) : (k_ <= l + m && l + m <= n_);
    }
    bool contains(Side side, Coord c) const noexcept { return contains(side, c.l, c.m); }

    /// Dense index of an on-lattice node; rows are stored bottom (l = 1) first.
    int index(Side side, int l, int m) const noexcept { return (l - 1) * kprime() + (m - m_begin(side, l)); }

    /// Lattice nodes in storage order.
    std::vector<Coord> nodes(Side side) const
    {
        std::vector<Coord> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int l = 1; l <= k_; ++l) {
            for (int m = m_begin(side, l); m < m_end(side, l); ++m) {
                out.push_back({l, m});
            }
        }
        return out;
    }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    int n_;
    int k_;
};

inline Shape make_shape(int n, int k) { return Shape{n, k}; }

inline std::uint64_t binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n) {
        return 0;
    }
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i) {
        out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    }
    return out;
}

/// Off-lattice reads return the multiplicative identity of the coordinate's semiring:
/// 1 for rationals, 0 for tropical integers.
template <class V>
V off_lattice_value()
{
    if constexpr (std::is_same_v<V, Rational>) {
        return Rational{1};
    } else {
        return V{0};
    }
}

/// A coordinate assignment on one of the two lattices.
template <class V, Side S>
class LatticePoint {
public:
    using value_type = V;
    static constexpr Side side = S;

    explicit LatticePoint(Shape shape)
        : shape_(shape), entries_(static_cast<std::size_t>(shape.size()), off_lattice_value<V>())
    {
    }

    LatticePoint(Shape shape, std::vector<V> entries) : shape_(shape), entries_(std::move(entries))
    {
        if (entries_.size() != static_cast<std::size_t>(shape.size())) {
            throw ValidationError("point has " + std::to_string(entries_.size()) + " entries, shape needs " +
                                  std::to_string(shape.size()));
        }
    }

    const Shape& shape() const noexcept { return shape_; }
    const std::vector<V>& entries() const noexcept { return entries_; }

    bool contains(int l, int m) const noexcept { return shape_.contains(S, l, m); }

    /// Entry at (l, m), or the semiring identity when (l, m) is off the lattice.
    V get(int l, int m) const
    {
        return contains(l, m) ? entries_[static_cast<std::size_t>(shape_.index(S, l, m))] : off_lattice_value<V>();
    }
    V get(Coord c) const { return get(c.l, c.m); }

    void set(int l, int m, V value)
    {
        if (!contains(l, m)) {
            throw ValidationError("(" + std::to_string(l) + "," + std::to_string(m) + ") is not a lattice node");
        }
        entries_[static_cast<std::size_t>(shape_.index(S, l, m))] = std::move(value);
    }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

private:
    Shape shape_;
    std::vector<V> entries_;
};

template <class V, Side S>
std::ostream& operator<<(std::ostream& os, const LatticePoint<V, S>& p)
{
    os << "{";
    bool first = true;
    for (const auto& c : p.shape().nodes(S)) {
        os << (first ? "" : ", ") << to_string(c) << ":" << p.get(c);
        first = false;
    }
    return os << "}";
}

using XPoint = LatticePoint<Rational, Side::L1>;
using YPoint = LatticePoint<Rational, Side::L2>;
using TropPoint = LatticePoint<std::int64_t, Side::L1>;
using TropYPoint = LatticePoint<std::int64_t, Side::L2>;

inline Rational x_get(const XPoint& x, int l, int m) { return x.get(l, m); }
inline std::int64_t trop_get(const TropPoint& x, int l, int m) { return x.get(l, m); }

template <class V, Side S>
bool all_positive(const LatticePoint<V, S>& p)
{
    for (const auto& v : p.entries()) {
        if (!(v > 0)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Seeded sampling

/// Identifier of the generator and reduction used by every sampler below.
inline constexpr const char* prng_id = "mt19937_64+rejection";

/// Deterministic random source; bounded draws use rejection so results do not
/// depend on the standard library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (hi < lo) {
            throw ValidationError("empty sampling range");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) {
            return static_cast<std::int64_t>(engine_());
        }
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return lo + static_cast<std::int64_t>(draw % span);
    }

    /// Positive rational with numerator and denominator uniform in [1, bound].
    Rational positive_rational(std::int64_t bound)
    {
        const auto num = uniform(1, bound);
        const auto den = uniform(1, bound);
        return make_rational(num, den);
    }

    /// Positive rational with numerator != denominator, so the value is not 1.
    Rational positive_rational_not_one(std::int64_t bound)
    {
        if (bound < 2) {
            throw ValidationError("bound must be at least 2 to avoid 1");
        }
        for (;;) {
            const auto num = uniform(1, bound);
            const auto den = uniform(1, bound);
            if (num != den) {
                return make_rational(num, den);
            }
        }
    }

    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

template <class P>
P sample_point(const Shape& shape, Sampler& rng, std::int64_t bound)
{
    if (bound < 1) {
        throw ValidationError("bound must be at least 1");
    }
    P p{shape};
    for (const auto& c : shape.nodes(P::side)) {
        if constexpr (std::is_same_v<typename P::value_type, Rational>) {
            p.set(c.l, c.m, rng.positive_rational(bound));
        } else {
            p.set(c.l, c.m, rng.uniform(-bound, bound));
        }
    }
    return p;
}

/// Pure function of (shape, seed, bound).
template <class P>
P sample_point(const Shape& shape, std::uint64_t seed, std::int64_t bound)
{
    Sampler rng{seed};
    return sample_point<P>(shape, rng, bound);
}

} // namespace gcrystal

#endif
