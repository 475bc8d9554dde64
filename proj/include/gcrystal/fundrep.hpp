#ifndef GCRYSTAL_FUNDREP_HPP
#define GCRYSTAL_FUNDREP_HPP

// The level-zero fundamental module spanned by k-subsets of {1..n+1}, with the
// Chevalley generators acting on basis tuples, and the vectors built from
// products of Y_i(c) = y_i(1/c) alpha_i(c) applied to extremal vectors.

#include "gcrystal/birational.hpp"
#include "gcrystal/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gcrystal {

/// Strictly increasing k-tuple of entries in 1..n+1.
using Tableau = std::vector<int>;

class FundVector {
public:
    explicit FundVector(Shape shape) : shape_(shape) {}

    const Shape& shape() const noexcept { return shape_; }
    const std::map<Tableau, Rational>& coeffs() const noexcept { return coeffs_; }

    bool valid_key(const Tableau& t) const
    {
        if (t.size() != static_cast<std::size_t>(shape_.k())) {
            return false;
        }
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j] < 1 || t[j] > shape_.n() + 1 || (j > 0 && t[j] <= t[j - 1])) {
                return false;
            }
        }
        return true;
    }

    Rational coeff(const Tableau& t) const
    {
        const auto it = coeffs_.find(t);
        return it == coeffs_.end() ? Rational{0} : it->second;
    }

    void add(const Tableau& t, const Rational& c)
    {
        if (!valid_key(t)) {
            throw ValidationError("basis key is not an increasing k-tuple in 1..n+1");
        }
        if (c == 0) {
            return;
        }
        auto [it, fresh] = coeffs_.try_emplace(t, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) {
                coeffs_.erase(it);
            }
        }
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    FundVector scaled(const Rational& c) const
    {
        FundVector out{shape_};
        for (const auto& [t, v] : coeffs_) {
            out.add(t, c * v);
        }
        return out;
    }

    friend FundVector operator+(const FundVector& a, const FundVector& b)
    {
        FundVector out = a;
        for (const auto& [t, v] : b.coeffs_) {
            out.add(t, v);
        }
        return out;
    }

    friend bool operator==(const FundVector& a, const FundVector& b)
    {
        return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
    }

private:
    Shape shape_;
    std::map<Tableau, Rational> coeffs_;
};

/// Every basis tuple, in lexicographic order.
inline std::vector<Tableau> fund_basis(const Shape& shape)
{
    std::vector<Tableau> out;
    Tableau t;
    auto walk = [&](auto&& self, int next) -> void {
        if (t.size() == static_cast<std::size_t>(shape.k())) {
            out.push_back(t);
            return;
        }
        for (int v = next; v <= shape.n() + 1; ++v) {
            t.push_back(v);
            self(self, v + 1);
            t.pop_back();
        }
    };
    walk(walk, 1);
    return out;
}

inline FundVector basis_vector(const Shape& shape, const Tableau& t)
{
    FundVector v{shape};
    v.add(t, Rational{1});
    return v;
}

enum class Gen { e, f, alpha };

namespace detail {

inline bool has(const Tableau& t, int v) { return std::binary_search(t.begin(), t.end(), v); }

inline Tableau swap_entry(Tableau t, int from, int to)
{
    *std::find(t.begin(), t.end(), from) = to;
    std::sort(t.begin(), t.end());
    return t;
}

/// Entries exchanged by the index-i generators: i <-> i+1, or n+1 <-> 1 for i = 0.
/// "low" is the entry f_i removes.
struct Exchange {
    int low;
    int high;
};

inline Exchange exchange(const Shape& shape, int i)
{
    if (i < 0 || i > shape.n()) {
        throw ValidationError("index must lie in 0.." + std::to_string(shape.n()) + ", got " + std::to_string(i));
    }
    return i == 0 ? Exchange{shape.n() + 1, 1} : Exchange{i, i + 1};
}

} // namespace detail

/// Applies e_i, f_i or alpha_i(c) to v. c is used only by alpha.
inline FundVector apply_gen(const FundVector& v, Gen gen, int i, const Rational& c = Rational{1})
{
    const Shape& shape = v.shape();
    const auto ex = detail::exchange(shape, i);
    if (gen == Gen::alpha && !(c > 0)) {
        throw ValidationError("c must be positive");
    }
    FundVector out{shape};
    for (const auto& [t, coef] : v.coeffs()) {
        const bool low = detail::has(t, ex.low);
        const bool high = detail::has(t, ex.high);
        switch (gen) {
        case Gen::f:
            if (low && !high) {
                out.add(detail::swap_entry(t, ex.low, ex.high), coef);
            }
            break;
        case Gen::e:
            if (high && !low) {
                out.add(detail::swap_entry(t, ex.high, ex.low), coef);
            }
            break;
        case Gen::alpha:
            out.add(t, low && !high ? coef * c : (high && !low ? coef / c : coef));
            break;
        }
    }
    return out;
}

/// Y_i(c) v = alpha_i(c) v + (1/c) f_i alpha_i(c) v.
inline FundVector apply_y_factor(const FundVector& v, int i, const Rational& c)
{
    const FundVector a = apply_gen(v, Gen::alpha, i, c);
    return a + apply_gen(a, Gen::f, i).scaled(1 / c);
}

/// (1, ..., k).
inline Tableau highest_x(const Shape& shape)
{
    Tableau t;
    for (int v = 1; v <= shape.k(); ++v) {
        t.push_back(v);
    }
    return t;
}

/// (1, ..., k-1, n+1).
inline Tableau highest_y(const Shape& shape)
{
    Tableau t;
    for (int v = 1; v < shape.k(); ++v) {
        t.push_back(v);
    }
    t.push_back(shape.n() + 1);
    return t;
}

namespace detail {

/// Rightmost factor first: row 1 up to row k, columns ascending within a row.
template <class P>
FundVector y_product(const P& p, const Tableau& start)
{
    const Shape& shape = p.shape();
    FundVector v = basis_vector(shape, start);
    for (const auto& [l, m] : shape.nodes(P::side)) {
        v = apply_y_factor(v, m, p.get(l, m));
    }
    return v;
}

} // namespace detail

inline FundVector v1_vector(const XPoint& x) { return detail::y_product(x, highest_x(x.shape())); }
inline FundVector v2_vector(const YPoint& y) { return detail::y_product(y, highest_y(y.shape())); }

struct ProportionalityResult {
    bool proportional = false;
    std::optional<Rational> ratio;
    FundVector v1;
    FundVector v2;
};

inline constexpr std::uint64_t fund_probe_max_dim = 10000;

/// Compares the y-chart vector of the chart change of x against the x-chart vector.
inline ProportionalityResult proportionality_probe(const XPoint& x)
{
    const Shape& shape = x.shape();
    if (binomial(shape.n() + 1, shape.k()) > fund_probe_max_dim) {
        throw ValidationError("module dimension exceeds " + std::to_string(fund_probe_max_dim));
    }
    ProportionalityResult r{false, std::nullopt, v1_vector(x), v2_vector(sigma_map(x))};
    if (r.v1.is_zero() || r.v2.is_zero()) {
        throw DomainFault("zero vector in proportionality probe");
    }
    if (r.v1.coeffs().size() != r.v2.coeffs().size()) {
        return r;
    }
    std::optional<Rational> ratio;
    for (const auto& [t, c1] : r.v1.coeffs()) {
        const Rational c2 = r.v2.coeff(t);
        if (c2 == 0) {
            return r;
        }
        const Rational q = c2 / c1;
        if (ratio && *ratio != q) {
            return r;
        }
        ratio = q;
    }
    r.proportional = true;
    r.ratio = ratio;
    return r;
}

} // namespace gcrystal

#endif
