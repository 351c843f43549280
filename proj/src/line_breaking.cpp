#include "gwcut/line_breaking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gwcut {

ReducedTree line_break_reduced_tree(int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("line_break_reduced_tree: k must be >= 1");

    // J_m = sqrt(2 (E_1 + ... + E_m)) maps a unit-rate Poisson process to
    // intensity t dt
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> cut(k);  // cut[m-1] = J_m
    double s = 0.0;
    for (int m = 0; m < k; ++m) {
        s += expo(rng);
        cut[m] = std::sqrt(2.0 * s);
    }

    // stick m attaches to host stick at a length-uniform point of [0, J_{m-1})
    std::vector<int> host(k + 1, 0);
    std::vector<double> offset(k + 1, 0.0);
    std::vector<std::vector<std::pair<double, int>>> grafts(k + 1);
    for (int m = 2; m <= k; ++m) {
        std::uniform_real_distribution<double> pos(0.0, cut[m - 2]);
        const double u = pos(rng);
        const int h = static_cast<int>(std::upper_bound(cut.begin(), cut.begin() + (m - 1), u) -
                                       cut.begin()) + 1;
        host[m] = h;
        offset[m] = u - (h >= 2 ? cut[h - 2] : 0.0);
        grafts[h].emplace_back(offset[m], m);
    }

    ReducedTree tree;
    tree.leaf_count = k;
    tree.parent.assign(1, -1);
    tree.length.assign(1, 0.0);
    tree.leaf_node.assign(k, 0);
    std::vector<int> attach_node(k + 1, 0);  // node where stick m starts

    auto new_node = [&](int parent, double len) {
        tree.parent.push_back(parent);
        tree.length.push_back(len);
        return tree.node_count() - 1;
    };

    for (int m = 1; m <= k; ++m) {
        std::sort(grafts[m].begin(), grafts[m].end());
        int at = (m == 1) ? 0 : attach_node[m];
        double covered = 0.0;
        for (auto [o, child] : grafts[m]) {
            at = new_node(at, o - covered);
            covered = o;
            attach_node[child] = at;
        }
        const double stick_len = cut[m - 1] - (m >= 2 ? cut[m - 2] : 0.0);
        tree.leaf_node[m - 1] = new_node(at, stick_len - covered);
    }
    return tree;
}

}  // namespace gwcut
