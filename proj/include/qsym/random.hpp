#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/group.hpp"
#include "qsym/isotopy.hpp"
#include "qsym/permutation.hpp"

namespace qsym {

inline Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

/// A random bijection with a prescribed fixed point (used for unitary
/// decomposition coefficients).
inline Permutation random_unitary_permutation(std::mt19937& rng, int n, int fixed_point) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int i = 0; i < n; ++i)
        if (i != fixed_point) rest.push_back(i);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<int> v(n);
    v[fixed_point] = fixed_point;
    int at = 0;
    for (int i = 0; i < n; ++i)
        if (i != fixed_point) v[i] = rest[at++];
    return Permutation(std::move(v));
}

/// A random isotope of a group table: gamma^-1(alpha x + beta y) with all
/// three permutations drawn uniformly.
inline CayleyTable random_group_isotope(std::mt19937& rng, const GroupStructure& g) {
    const int n = g.order();
    return apply_isotopy(g.table, random_permutation(rng, n), random_permutation(rng, n),
                         random_permutation(rng, n));
}

} // namespace qsym
