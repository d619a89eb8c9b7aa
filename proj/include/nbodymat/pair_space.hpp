#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nbodymat/errors.hpp"

namespace nbodymat {

/// Unordered pair {i, j} of distinct 0-based point indices, stored with i < j.
class PairIndex {
public:
    PairIndex(int a, int b) : i_(a < b ? a : b), j_(a < b ? b : a) {
        if (a == b) throw DomainError("pair index needs two distinct points, got {" + std::to_string(a) + "," +
                                      std::to_string(b) + "}");
        if (i_ < 0) throw DomainError("negative point index");
    }

    int i() const { return i_; }
    int j() const { return j_; }
    bool contains(int k) const { return i_ == k || j_ == k; }
    /// The member of the pair that is not k; k must belong to the pair.
    int other(int k) const { return k == i_ ? j_ : i_; }

    /// 1-based "i,j" label as used in JSON documents.
    std::string label() const { return std::to_string(i_ + 1) + "," + std::to_string(j_ + 1); }

    friend auto operator<=>(const PairIndex&, const PairIndex&) = default;

private:
    int i_;
    int j_;
};

/// Lexicographic enumeration {1,2}, {1,3}, ..., {1,n}, {2,3}, ... of all
/// n(n-1)/2 pairs drawn from n points.
class PairSpace {
public:
    explicit PairSpace(int n) : n_(n) {
        if (n < 1) throw DomainError("pair space needs n >= 1");
    }

    int n() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2; }

    std::size_t rank(const PairIndex& p) const {
        if (p.j() >= n_) throw DomainError("pair " + p.label() + " outside [n] for n = " + std::to_string(n_));
        const auto i = static_cast<std::size_t>(p.i());
        const auto j = static_cast<std::size_t>(p.j());
        const auto n = static_cast<std::size_t>(n_);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t rank(int a, int b) const { return rank(PairIndex(a, b)); }

    PairIndex unrank(std::size_t k) const {
        if (k >= size()) throw DomainError("pair rank " + std::to_string(k) + " out of range");
        int i = 0;
        std::size_t row = static_cast<std::size_t>(n_ - 1);
        while (k >= row) {
            k -= row;
            --row;
            ++i;
        }
        return PairIndex(i, i + 1 + static_cast<int>(k));
    }

    std::vector<PairIndex> pairs() const {
        std::vector<PairIndex> out;
        out.reserve(size());
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) out.emplace_back(i, j);
        return out;
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& p : pairs()) out.push_back(p.label());
        return out;
    }

private:
    int n_;
};

}  // namespace nbodymat
