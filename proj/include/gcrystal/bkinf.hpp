#ifndef GCRYSTAL_BKINF_HPP
#define GCRYSTAL_BKINF_HPP

// The combinatorial crystal B^{k,inf}: integer arrays (b_ji), 1 <= j <= k,
// j <= i <= j + k', with zero row sums.

#include "gcrystal/cartan.hpp"
#include "gcrystal/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace gcrystal {

class BElement {
public:
    /// The element with all entries 0.
    explicit BElement(Shape shape)
        : shape_(shape), entries_(static_cast<std::size_t>(shape.k() * (shape.kprime() + 1)), 0)
    {
    }

    /// Row-major entries, row j holding columns j..j+k'. Rows must sum to zero.
    BElement(Shape shape, std::vector<std::int64_t> entries) : shape_(shape), entries_(std::move(entries))
    {
        if (entries_.size() != static_cast<std::size_t>(shape.k() * (shape.kprime() + 1))) {
            throw ValidationError("element has " + std::to_string(entries_.size()) + " entries, shape needs " +
                                  std::to_string(shape.k() * (shape.kprime() + 1)));
        }
        for (int j = 1; j <= shape.k(); ++j) {
            if (row_sum(j) != 0) {
                throw ValidationError("row " + std::to_string(j) + " does not sum to zero");
            }
        }
    }

    const Shape& shape() const noexcept { return shape_; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    bool contains(int j, int i) const noexcept
    {
        return j >= 1 && j <= shape_.k() && i >= j && i <= j + shape_.kprime();
    }

    /// b_ji, or 0 outside the index range.
    std::int64_t get(int j, int i) const { return contains(j, i) ? entries_[offset(j, i)] : 0; }

    /// Adds delta to b_ji. Callers keep row sums at zero.
    void add(int j, int i, std::int64_t delta)
    {
        if (!contains(j, i)) {
            throw ValidationError("(" + std::to_string(j) + "," + std::to_string(i) + ") is outside the array");
        }
        entries_[offset(j, i)] += delta;
    }

    std::int64_t row_sum(int j) const
    {
        std::int64_t acc = 0;
        for (int i = j; i <= j + shape_.kprime(); ++i) {
            acc += get(j, i);
        }
        return acc;
    }

    friend bool operator==(const BElement&, const BElement&) = default;

private:
    std::size_t offset(int j, int i) const
    {
        return static_cast<std::size_t>((j - 1) * (shape_.kprime() + 1) + (i - j));
    }

    Shape shape_;
    std::vector<std::int64_t> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const BElement& b)
{
    os << "[";
    for (int j = 1; j <= b.shape().k(); ++j) {
        os << (j > 1 ? "; " : "");
        for (int i = j; i <= j + b.shape().kprime(); ++i) {
            os << (i > j ? " " : "") << b.get(j, i);
        }
    }
    return os << "]";
}

/// Uniform entries in [-bound, bound] on all but the last column of each row, which balances the row.
inline BElement sample_belement(const Shape& shape, Sampler& rng, std::int64_t bound)
{
    BElement b{shape};
    for (int j = 1; j <= shape.k(); ++j) {
        std::int64_t acc = 0;
        for (int i = j; i < j + shape.kprime(); ++i) {
            const auto v = rng.uniform(-bound, bound);
            b.add(j, i, v);
            acc += v;
        }
        b.add(j, j + shape.kprime(), -acc);
    }
    return b;
}

/// (c_0, ..., c_k) with c_0 = 1 < c_1 < ... < c_k = n + 1.
using CTuple = std::vector<int>;

inline bool valid_ctuple(const Shape& shape, const CTuple& c)
{
    if (c.size() != static_cast<std::size_t>(shape.k() + 1) || c.front() != 1 || c.back() != shape.n() + 1) {
        return false;
    }
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] <= c[j - 1]) {
            return false;
        }
    }
    return true;
}

/// All admissible tuples in lexicographic order; binomial(n-1, k-1) of them.
inline std::vector<CTuple> enumerate_ctuples(const Shape& shape)
{
    const int k = shape.k();
    const int n = shape.n();
    std::vector<CTuple> out;
    CTuple c(static_cast<std::size_t>(k + 1));
    c[0] = 1;
    c[static_cast<std::size_t>(k)] = n + 1;
    auto fill = [&](auto&& self, int j) -> void {
        if (j == k) {
            out.push_back(c);
            return;
        }
        // c_j leaves room for k - j - 1 more values below n + 1
        for (int v = c[static_cast<std::size_t>(j - 1)] + 1; v <= n - (k - 1 - j); ++v) {
            c[static_cast<std::size_t>(j)] = v;
            self(self, j + 1);
        }
    };
    fill(fill, 1);
    return out;
}

inline std::int64_t delta(const BElement& b, const CTuple& c)
{
    if (!valid_ctuple(b.shape(), c)) {
        throw ValidationError("invalid c-tuple");
    }
    std::int64_t acc = 0;
    for (int j = 1; j <= b.shape().k(); ++j) {
        for (int i = c[static_cast<std::size_t>(j - 1)] + 1; i < c[static_cast<std::size_t>(j)]; ++i) {
            acc += b.get(j, i);
        }
    }
    return acc;
}

enum class KOp { e, f };

namespace detail {

inline bool precedes(const CTuple& a, const CTuple& b)
{
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
    }
    return true;
}

inline std::string format_ctuple(const CTuple& c)
{
    std::string s = "(";
    for (std::size_t j = 0; j < c.size(); ++j) {
        s += (j ? "," : "") + std::to_string(c[j]);
    }
    return s + ")";
}

} // namespace detail

/// Whether c satisfies the defining inequalities of the e- (or f-) extremal minimizer against every tuple.
inline bool is_extremal(const BElement& b, const CTuple& c, KOp which)
{
    const std::int64_t dc = delta(b, c);
    for (const auto& other : enumerate_ctuples(b.shape())) {
        const bool ordered = which == KOp::e ? detail::precedes(c, other) : detail::precedes(other, c);
        const std::int64_t d = delta(b, other);
        if (ordered ? !(dc <= d) : !(dc < d)) {
            return false;
        }
    }
    return true;
}

/// Coordinatewise min (e) or max (f) over the minimizers of delta, unchecked.
inline CTuple minimizer_bound(const BElement& b, KOp which)
{
    const auto all = enumerate_ctuples(b.shape());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : all) {
        best = std::min(best, delta(b, c));
    }
    CTuple out;
    for (const auto& c : all) {
        if (delta(b, c) != best) {
            continue;
        }
        if (out.empty()) {
            out = c;
            continue;
        }
        for (std::size_t j = 0; j < c.size(); ++j) {
            out[j] = which == KOp::e ? std::min(out[j], c[j]) : std::max(out[j], c[j]);
        }
    }
    return out;
}

/// minimizer_bound checked against the extremal inequalities; throws DomainFault with a witness on failure.
inline CTuple extremal_c(const BElement& b, KOp which)
{
    const CTuple out = minimizer_bound(b, which);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : enumerate_ctuples(b.shape())) {
        best = std::min(best, delta(b, c));
    }
    if (delta(b, out) != best || !is_extremal(b, out, which)) {
        throw DomainFault("extremal tuple " + detail::format_ctuple(out) + " fails the minimizer inequalities");
    }
    return out;
}

/// beta = max(0, i - k'), gamma = min(k, i).
struct BRange {
    int lo;
    int hi;
};

inline BRange b_range(const Shape& shape, int i)
{
    if (i < 1 || i > shape.n()) {
        throw ValidationError("index must lie in 1..n, got " + std::to_string(i));
    }
    return {std::max(0, i - shape.kprime()), std::min(shape.k(), i)};
}

/// Partial sum over lo < j < c of (b_ji - b_(j+1),(i+1)).
inline std::int64_t gamma_partial(const BElement& b, int i, int c)
{
    const BRange r = b_range(b.shape(), i);
    std::int64_t acc = 0;
    for (int j = r.lo + 1; j < c; ++j) {
        acc += b.get(j, i) - b.get(j + 1, i + 1);
    }
    return acc;
}

struct EpsPhi {
    std::int64_t eps;
    std::int64_t phi;
    friend bool operator==(const EpsPhi&, const EpsPhi&) = default;
};

namespace detail {

/// (first, last) minimizers of gamma_partial over lo < c <= hi.
inline std::pair<int, int> argmin_rows(const BElement& b, int i)
{
    const BRange r = b_range(b.shape(), i);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    int first = 0;
    int last = 0;
    for (int c = r.lo + 1; c <= r.hi; ++c) {
        const auto g = gamma_partial(b, i, c);
        if (g < best) {
            best = g;
            first = c;
            last = c;
        } else if (g == best) {
            last = c;
        }
    }
    return {first, last};
}

inline void check_b_index(const Shape& shape, int i)
{
    if (i < 0 || i > shape.n()) {
        throw ValidationError("index must lie in 0.." + std::to_string(shape.n()) + ", got " + std::to_string(i));
    }
}

} // namespace detail

inline EpsPhi eps_phi_0(const BElement& b)
{
    const Shape& s = b.shape();
    const auto ce = extremal_c(b, KOp::e);
    const auto cf = extremal_c(b, KOp::f);
    return {-b.get(s.k(), s.n() + 1) - delta(b, ce), -b.get(1, 1) - delta(b, cf)};
}

inline EpsPhi eps_phi(const BElement& b, int i)
{
    detail::check_b_index(b.shape(), i);
    if (i == 0) {
        return eps_phi_0(b);
    }
    const BRange r = b_range(b.shape(), i);
    const auto [c0, c1] = detail::argmin_rows(b, i);
    EpsPhi out{0, 0};
    for (int j = r.lo; j < c0; ++j) {
        out.eps += b.get(j + 1, i + 1) - b.get(j, i);
    }
    for (int j = c1; j <= r.hi; ++j) {
        out.phi += b.get(j, i) - b.get(j + 1, i + 1);
    }
    return out;
}

/// wt_i = phi_i - eps_i.
inline std::int64_t b_wt(const BElement& b, int i)
{
    const auto ep = eps_phi(b, i);
    return ep.phi - ep.eps;
}

/// Closed forms: -b_11 + b_(k,n+1) for i = 0, else the sum over lo <= j <= hi of (b_ji - b_(j+1),(i+1)).
inline std::int64_t b_wt_closed(const BElement& b, int i)
{
    const Shape& s = b.shape();
    detail::check_b_index(s, i);
    if (i == 0) {
        return -b.get(1, 1) + b.get(s.k(), s.n() + 1);
    }
    const BRange r = b_range(s, i);
    std::int64_t acc = 0;
    for (int j = r.lo; j <= r.hi; ++j) {
        acc += b.get(j, i) - b.get(j + 1, i + 1);
    }
    return acc;
}

inline BElement zero_op(const BElement& b, KOp op)
{
    const auto c = extremal_c(b, op);
    BElement out = b;
    for (int j = 1; j <= b.shape().k(); ++j) {
        const int lower = c[static_cast<std::size_t>(j - 1)];
        const int upper = c[static_cast<std::size_t>(j)];
        if (op == KOp::e) {
            out.add(j, lower, -1);
            out.add(j, upper, +1);
        } else {
            out.add(j, upper, -1);
            out.add(j, lower, +1);
        }
    }
    return out;
}

/// Kashiwara operator e_i or f_i, i in 0..n. Total on B^{k,inf}.
inline BElement kashiwara(const BElement& b, KOp op, int i)
{
    detail::check_b_index(b.shape(), i);
    if (i == 0) {
        return zero_op(b, op);
    }
    const auto [c0, c1] = detail::argmin_rows(b, i);
    BElement out = b;
    if (op == KOp::e) {
        out.add(c0, i, +1);
        out.add(c0, i + 1, -1);
    } else {
        out.add(c1, i, -1);
        out.add(c1, i + 1, +1);
    }
    return out;
}

/// e_i^d: d applications of e_i for d >= 0, |d| applications of f_i otherwise.
inline BElement kashiwara_power(const BElement& b, int i, std::int64_t d)
{
    BElement out = b;
    const KOp op = d >= 0 ? KOp::e : KOp::f;
    for (std::int64_t s = 0; s < (d >= 0 ? d : -d); ++s) {
        out = kashiwara(out, op, i);
    }
    return out;
}

/// Reflection by iteration: e_i^(-wt_i).
inline BElement weyl_s_tilde_iterate(const BElement& b, int i) { return kashiwara_power(b, i, -b_wt(b, i)); }

namespace detail {

inline constexpr std::int64_t no_value = std::numeric_limits<std::int64_t>::max();

inline std::int64_t plus_opt(std::int64_t shift, std::int64_t v) { return v == no_value ? no_value : shift + v; }

} // namespace detail

/// Closed-form reflection.
inline BElement weyl_s_tilde(const BElement& b, int i)
{
    const Shape& s = b.shape();
    detail::check_b_index(s, i);
    using detail::no_value;
    BElement out = b;
    if (i == 0) {
        const auto tuples = enumerate_ctuples(s);
        const std::int64_t b11 = b.get(1, 1);
        const std::int64_t bkn = b.get(s.k(), s.n() + 1);
        std::vector<std::int64_t> d1;
        std::vector<std::int64_t> dk;
        for (const auto& c : tuples) {
            const auto dc = delta(b, c);
            d1.push_back(dc + b11);
            dk.push_back(dc + bkn);
        }
        // min(min over c_j > m of d1, min over c_j <= m of dk)
        auto split_min = [&](int j, int m) {
            std::int64_t best = no_value;
            for (std::size_t t = 0; t < tuples.size(); ++t) {
                const int cj = tuples[t][static_cast<std::size_t>(j)];
                best = std::min(best, cj > m ? d1[t] : dk[t]);
            }
            return best;
        };
        for (int j = 1; j <= s.k(); ++j) {
            for (int m = j; m <= j + s.kprime(); ++m) {
                const auto shift = split_min(j - 1, m) - split_min(j, m) + split_min(j, m - 1) - split_min(j - 1, m - 1);
                out.add(j, m, shift);
            }
        }
        return out;
    }
    const BRange r = b_range(s, i);
    const std::int64_t d = -b_wt_closed(b, i);
    // head(c) = sum over lo <= j < c of (b_ji - b_(j+1),(i+1)); its minimizers are the rows e_i picks.
    std::vector<std::int64_t> head(static_cast<std::size_t>(r.hi + 1), 0);
    std::int64_t acc = 0;
    for (int c = r.lo; c <= r.hi; ++c) {
        head[static_cast<std::size_t>(c)] = acc;
        acc += b.get(c, i) - b.get(c + 1, i + 1);
    }
    auto range_min = [&](int from, int to) {
        std::int64_t best = no_value;
        for (int p = std::max(from, r.lo + 1); p <= std::min(to, r.hi); ++p) {
            best = std::min(best, head[static_cast<std::size_t>(p)]);
        }
        return best;
    };
    // Row c absorbs min(min_{p>=c}, -d + min_{p<c}) - min(min_{p>c}, -d + min_{p<=c}) unit moves.
    for (int c = r.lo + 1; c <= r.hi; ++c) {
        const auto kept = std::min(range_min(c, r.hi), detail::plus_opt(-d, range_min(r.lo + 1, c - 1)));
        const auto passed = std::min(range_min(c + 1, r.hi), detail::plus_opt(-d, range_min(r.lo + 1, c)));
        const auto moves = kept - passed;
        if (moves != 0) {
            out.add(c, i, moves);
            out.add(c, i + 1, -moves);
        }
    }
    return out;
}

} // namespace gcrystal

#endif
