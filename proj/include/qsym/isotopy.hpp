#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/parastrophe.hpp"
#include "qsym/permutation.hpp"

namespace qsym {

/// Isotope with triple (alpha, beta, gamma): out(x, y) = gamma^-1(t(alpha x, beta y)).
inline CayleyTable apply_isotopy(const CayleyTable& t, const Permutation& alpha,
                                 const Permutation& beta, const Permutation& gamma) {
    const int n = t.order();
    if (alpha.size() != n || beta.size() != n || gamma.size() != n)
        throw std::invalid_argument("isotopy permutations must match the table order");
    const Permutation gamma_inv = gamma.inverse();
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cells[static_cast<size_t>(x) * n + y] = gamma_inv(t.at(alpha(x), beta(y)));
    return CayleyTable(n, std::move(cells));
}

inline bool is_isomorphism(const CayleyTable& t1, const CayleyTable& t2, const Permutation& phi) {
    const int n = t1.order();
    if (t2.order() != n || phi.size() != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (phi(t1.at(x, y)) != t2.at(phi(x), phi(y))) return false;
    return true;
}

namespace detail {

/// Multiset of cycle types of the row (or column) translations.
/// Conjugation-invariant, so it must agree between isomorphic tables.
inline std::vector<std::vector<int>> translation_cycle_types(const CayleyTable& t, bool rows) {
    const int n = t.order();
    std::vector<std::vector<int>> types;
    types.reserve(n);
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> type;
        for (int start = 0; start < n; ++start) {
            if (seen[start]) continue;
            int len = 0, cur = start;
            while (!seen[cur]) {
                seen[cur] = 1;
                cur = rows ? t.at(i, cur) : t.at(cur, i);
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        types.push_back(std::move(type));
    }
    std::sort(types.begin(), types.end());
    return types;
}

// Backtracking over partial bijections.  Assigning phi(x) forces
// phi(t1(a,b)) = t2(phi a, phi b) for every fully mapped pair, which is
// propagated eagerly; candidates are tried in ascending order so the
// returned isomorphism is deterministic.
class IsomorphismSearch {
public:
    IsomorphismSearch(const CayleyTable& t1, const CayleyTable& t2)
        : t1_(t1), t2_(t2), n_(t1.order()), img_(n_, -1), used_(n_, 0) {}

    std::optional<Permutation> run() {
        if (search()) return Permutation(img_);
        return std::nullopt;
    }

private:
    bool assign(int x, int v, std::vector<int>& trail) {
        if (img_[x] != -1) return img_[x] == v;
        if (used_[v]) return false;
        img_[x] = v;
        used_[v] = 1;
        trail.push_back(x);
        return true;
    }

    // Close the partial map under products; false on contradiction.
    bool propagate(std::vector<int>& trail) {
        for (size_t head = 0; head < trail.size(); ++head) {
            const int x = trail[head];
            for (int y = 0; y < n_; ++y) {
                if (img_[y] == -1) continue;
                if (!assign(t1_.at(x, y), t2_.at(img_[x], img_[y]), trail)) return false;
                if (!assign(t1_.at(y, x), t2_.at(img_[y], img_[x]), trail)) return false;
            }
        }
        return true;
    }

    void undo(const std::vector<int>& trail) {
        for (int x : trail) {
            used_[img_[x]] = 0;
            img_[x] = -1;
        }
    }

    bool search() {
        int x = 0;
        while (x < n_ && img_[x] != -1) ++x;
        if (x == n_) return true;  // propagation keeps the map consistent
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            std::vector<int> trail;
            if (assign(x, v, trail) && propagate(trail) && search()) return true;
            undo(trail);
        }
        return false;
    }

    const CayleyTable& t1_;
    const CayleyTable& t2_;
    int n_;
    std::vector<int> img_;
    std::vector<char> used_;
};

} // namespace detail

/// Finds phi with phi(t1(x,y)) = t2(phi x, phi y), or nullopt.  The search
/// is exhaustive; cheap isomorphism invariants (symmetry group, translation
/// cycle structure) are compared first to prune hopeless pairs.
inline std::optional<Permutation> find_isomorphism(const CayleyTable& t1, const CayleyTable& t2) {
    if (t1.order() != t2.order()) return std::nullopt;
    if (!(symmetry_group(t1) == symmetry_group(t2))) return std::nullopt;
    if (detail::translation_cycle_types(t1, true) != detail::translation_cycle_types(t2, true))
        return std::nullopt;
    if (detail::translation_cycle_types(t1, false) != detail::translation_cycle_types(t2, false))
        return std::nullopt;
    return detail::IsomorphismSearch(t1, t2).run();
}

} // namespace qsym
