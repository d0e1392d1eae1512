#pragma once

#include <utility>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/errors.hpp"
#include "qsym/permutation.hpp"

namespace qsym {

/// A Cayley table verified associative with a two-sided neutral element.
struct GroupStructure {
    CayleyTable table;
    int neutral;
    std::vector<int> inverses;
    bool abelian;

    int order() const { return table.order(); }
    int add(int x, int y) const { return table.at(x, y); }
    int neg(int x) const { return inverses[x]; }

    /// The map x -> -x as a permutation (written -i in the criteria).
    Permutation negation() const { return Permutation(inverses); }

    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Verifies associativity and a two-sided neutral, then fills the inverse
/// map and the abelian flag.
inline GroupStructure group_from_table(const CayleyTable& t) {
    const int n = t.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) throw not_associative(x, y, z);

    int neutral = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = t.at(e, x) == x && t.at(x, e) == x;
        if (ok) {
            neutral = e;
            break;
        }
    }
    if (neutral < 0) throw no_neutral();

    std::vector<int> inverses(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.at(x, y) == neutral) {
                inverses[x] = y;
                break;
            }

    bool abelian = true;
    for (int x = 0; x < n && abelian; ++x)
        for (int y = x + 1; y < n && abelian; ++y) abelian = t.at(x, y) == t.at(y, x);

    return GroupStructure{t, neutral, std::move(inverses), abelian};
}

inline bool is_automorphism(const GroupStructure& g, const Permutation& p) {
    const int n = g.order();
    if (p.size() != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p(g.add(x, y)) != g.add(p(x), p(y))) return false;
    return true;
}

inline bool is_anti_automorphism(const GroupStructure& g, const Permutation& p) {
    const int n = g.order();
    if (p.size() != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p(g.add(x, y)) != g.add(p(y), p(x))) return false;
    return true;
}

/// The inner shift I_a: x -> (-a) + x + a.
inline Permutation inner_shift(const GroupStructure& g, int a) {
    const int n = g.order();
    std::vector<int> v(n);
    for (int x = 0; x < n; ++x) v[x] = g.add(g.add(g.neg(a), x), a);
    return Permutation(std::move(v));
}

} // namespace qsym
