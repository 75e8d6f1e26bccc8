#pragma once

#include <vector>

#include "pgw/algebra.hpp"

namespace pgw {

// Minimal union-find with path halving; feeds Partition and the congruence
// closure.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // Returns true when the classes were distinct.
    bool merge(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (ry < rx) std::swap(rx, ry);  // keep least element as root
        parent_[static_cast<std::size_t>(ry)] = rx;
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

// Equivalence relation in canonical form: block ids are assigned in order of
// first occurrence, so equal partitions have equal representations.
class Partition {
public:
    explicit Partition(std::vector<int> block_of);

    static Partition discrete(int n);   // Delta
    static Partition universal(int n);  // Nabla
    static Partition from_union_find(UnionFind& uf);

    int size() const { return static_cast<int>(block_of_.size()); }
    int block(int x) const { return block_of_[static_cast<std::size_t>(x)]; }
    int num_blocks() const { return num_blocks_; }
    bool same(int x, int y) const { return block(x) == block(y); }

    bool is_discrete() const { return num_blocks_ == size(); }
    bool is_universal() const { return num_blocks_ == 1; }

    std::vector<std::vector<int>> blocks() const;

    Partition meet(const Partition& o) const;
    // theta o theta' covers all pairs, i.e. every block of the meet-free
    // composition reaches everything.
    bool composes_to_universal(const Partition& o) const;

    const std::vector<int>& raw() const { return block_of_; }

    bool operator==(const Partition& o) const { return block_of_ == o.block_of_; }
    bool operator<(const Partition& o) const { return block_of_ < o.block_of_; }

private:
    std::vector<int> block_of_;
    int num_blocks_ = 0;
};

bool is_congruence(const FiniteAlgebra& a, const Partition& p);

}  // namespace pgw
