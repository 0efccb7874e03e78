#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace relpoly {

/// Disjoint-set forest with union by size and path halving. Tracks the number
/// of sets among the elements that have been activated.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    void reset() {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
        std::fill(size_.begin(), size_.end(), std::size_t{1});
        components_ = 0;
    }

    /// Marks a fresh element as present; it forms its own set.
    void activate() noexcept { ++components_; }

    std::size_t find(std::size_t x) noexcept {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true when a merge happened.
    bool unite(std::size_t a, std::size_t b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_ = 0;
};

}  // namespace relpoly
