#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "qsym/group.hpp"

namespace qsym {

/// Z_n under addition.
inline GroupStructure cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("group order must be positive");
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells[static_cast<size_t>(x) * n + y] = (x + y) % n;
    return group_from_table(CayleyTable(n, std::move(cells)));
}

/// Componentwise product; element (x, y) is encoded as x * |b| + y.
inline GroupStructure direct_product(const GroupStructure& a, const GroupStructure& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int sum_a = a.add(x / nb, y / nb);
            const int sum_b = b.add(x % nb, y % nb);
            cells[static_cast<size_t>(x) * n + y] = sum_a * nb + sum_b;
        }
    return group_from_table(CayleyTable(n, std::move(cells)));
}

/// The symmetric group on three letters (order 6, nonabelian); elements
/// are the permutations of {0,1,2} in lexicographic order, composed
/// right-to-left.
inline GroupStructure symmetric_group3() {
    const std::array<std::array<int, 3>, 6> perms{{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("not a permutation of three letters");
    };
    std::vector<int> cells(36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> prod{};
            for (int k = 0; k < 3; ++k) prod[k] = perms[i][perms[j][k]];
            cells[static_cast<size_t>(i) * 6 + j] = index_of(prod);
        }
    return group_from_table(CayleyTable(6, std::move(cells)));
}

/// Dihedral group of order 2n: rotations 0..n-1, reflections n..2n-1.
inline GroupStructure dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
    const int order = 2 * n;
    auto mul = [n](int x, int y) {
        const bool fx = x >= n, fy = y >= n;
        const int rx = x % n, ry = y % n;
        // reflections conjugate rotations: f r^k = r^-k f
        const int rot = fx ? ((rx - ry) % n + n) % n : (rx + ry) % n;
        return rot + (fx != fy ? n : 0);
    };
    std::vector<int> cells(static_cast<size_t>(order) * order);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) cells[static_cast<size_t>(x) * order + y] = mul(x, y);
    return group_from_table(CayleyTable(order, std::move(cells)));
}

/// The quaternion group {1, i, j, k, -1, -i, -j, -k} of order 8.
inline GroupStructure quaternion_group8() {
    auto mul = [](int x, int y) {
        // element encoding: index = sign*4 + unit, units ordered 1, i, j, k
        // unit products: i*i = j*j = k*k = -1, i*j = k, j*k = i, k*i = j
        const int sx = x / 4, ux = x % 4;
        const int sy = y / 4, uy = y % 4;
        static const int table[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
        const int prod = table[ux][uy];  // value%4 = unit, value/4 = extra sign
        const int unit = prod % 4;
        const int sign = (sx + sy + prod / 4) % 2;
        return sign * 4 + unit;
    };
    std::vector<int> cells(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) cells[static_cast<size_t>(x) * 8 + y] = mul(x, y);
    return group_from_table(CayleyTable(8, std::move(cells)));
}

} // namespace qsym
