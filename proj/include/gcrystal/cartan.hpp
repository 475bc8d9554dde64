#ifndef GCRYSTAL_CARTAN_HPP
#define GCRYSTAL_CARTAN_HPP

#include "gcrystal/rational.hpp"

#include <string>
#include <vector>

namespace gcrystal {

/// Generalized Cartan matrix of the affine type A_n^(1), indices 0..n.
class CartanA1n {
public:
    explicit CartanA1n(int n) : n_(n)
    {
        if (n < 2) {
            throw ValidationError("affine type A needs n >= 2, got " + std::to_string(n));
        }
    }

    int n() const noexcept { return n_; }
    int rank() const noexcept { return n_ + 1; }

    int operator()(int i, int j) const
    {
        check(i);
        check(j);
        if (i == j) {
            return 2;
        }
        const int r = rank();
        const int diff = ((i - j) % r + r) % r;
        return (diff == 1 || diff == r - 1) ? -1 : 0;
    }

    bool adjacent(int i, int j) const { return i != j && (*this)(i, j) == -1; }

    std::vector<std::vector<int>> matrix() const
    {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rank()));
        for (int i = 0; i <= n_; ++i) {
            for (int j = 0; j <= n_; ++j) {
                out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
            }
        }
        return out;
    }

private:
    void check(int i) const
    {
        if (i < 0 || i > n_) {
            throw ValidationError("index " + std::to_string(i) + " outside 0.." + std::to_string(n_));
        }
    }

    int n_;
};

} // namespace gcrystal

#endif
