#pragma once

#include <vector>

#include "qsym/qsym.hpp"

namespace qsym::test {

/// Order-5 Latin square whose principal loop at 0 is non-associative,
/// hence not isotopic to any group.  Found once by backtracking search
/// over order-5 squares and frozen here; its oracle class is asymmetric.
inline CayleyTable non_group_isotope5() {
    return validate_quasigroup({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 3, 4, 1, 0},
                                {3, 4, 0, 2, 1},
                                {4, 2, 1, 0, 3}});
}

inline CayleyTable lin(int m, int alpha, int beta, int d) {
    return linear_isotope_table({m, alpha, beta, d});
}

/// All automorphisms of a group, by exhaustive candidate search over
/// images: tiny orders only.
inline std::vector<Permutation> all_automorphisms(const GroupStructure& g) {
    const int n = g.order();
    std::vector<Permutation> out;
    std::vector<int> img(n);
    std::vector<char> used(n);
    // backtracking over images with the homomorphism constraint
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            Permutation p(img);
            if (is_automorphism(g, p)) out.push_back(std::move(p));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int y = 0; y < x && ok; ++y) {
                const int s = g.add(x, y), t = g.add(y, x);
                if (s < x && img[s] != g.add(v, img[y])) ok = false;
                if (t < x && img[t] != g.add(img[y], v)) ok = false;
            }
            if (!ok) continue;
            img[x] = v;
            used[v] = 1;
            self(self, x + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace qsym::test
