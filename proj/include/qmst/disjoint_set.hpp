#pragma once

#include <numeric>
#include <vector>

namespace qmst {

// Union-find with path halving; used for cycle detection and connectivity.
class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false when x and y were already connected.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent_[x] = y;
        --components_;
        return true;
    }

    bool same(int x, int y) { return find(x) == find(y); }
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    int components_;
};

}  // namespace qmst
