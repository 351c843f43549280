#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace gwcut {

// Union-find with path halving and union by size.
struct DisjointSet {
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> size;

    explicit DisjointSet(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Merges the sets of a and b; returns the surviving root.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return a;
    }
};

}  // namespace gwcut
