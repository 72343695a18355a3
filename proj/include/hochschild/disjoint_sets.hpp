#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace hochschild {

// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

    /// Class label per element, labels numbered 0.. in order of first appearance.
    std::vector<std::size_t> labels()
    {
        std::vector<std::size_t> label(parent_.size());
        std::vector<std::size_t> root_label(parent_.size(), npos);
        std::size_t next = 0;
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            const std::size_t r = find(x);
            if (root_label[r] == npos)
                root_label[r] = next++;
            label[x] = root_label[r];
        }
        return label;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace hochschild
