#pragma once

#include <stdexcept>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/sigma.hpp"

namespace qsym {

/// The sigma-parastrophe of a quasigroup: each product triple (x, y, x*y)
/// is rearranged so that the entry at position sigma(i) of the new triple
/// is the entry at position i of the old one.  With this orientation,
/// parastrophe(parastrophe(t, tau), sigma) = parastrophe(t, compose(sigma, tau)).
inline CayleyTable parastrophe(const CayleyTable& t, const Sigma& sigma) {
    const int n = t.order();
    std::vector<int> cells(static_cast<size_t>(n) * n, -1);
    int triple[3];
    int moved[3];
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            triple[0] = x;
            triple[1] = y;
            triple[2] = t.at(x, y);
            for (int i = 0; i < 3; ++i) moved[sigma(i)] = triple[i];
            cells[static_cast<size_t>(moved[0]) * n + moved[1]] = moved[2];
        }
    }
    return CayleyTable(n, std::move(cells));
}

/// All sigma whose parastrophe equals the table itself.
inline SymmetryGroup symmetry_group(const CayleyTable& t) {
    SymmetryGroup g;
    for (const Sigma& sig : Sigma::all())
        if (parastrophe(t, sig) == t) g.insert(sig.label());
    return g;
}

/// Strict classification by exhaustive parastrophe comparison.  This is
/// the ground-truth path; the decomposition criteria must agree with it
/// on every group isotope.
inline SymmetryClass classify_by_oracle(const CayleyTable& t) {
    return class_of(symmetry_group(t));
}

enum class Identity {
    commutative,     // xy = yx
    left_symmetric,  // x * xy = y
    right_symmetric, // xy * y = x
    semi_symmetric,  // x * yx = y
    medial,          // xy * uv = xu * yv
};

inline Identity identity_from_string(const std::string& name) {
    if (name == "commutative") return Identity::commutative;
    if (name == "left-symmetric") return Identity::left_symmetric;
    if (name == "right-symmetric") return Identity::right_symmetric;
    if (name == "semi-symmetric") return Identity::semi_symmetric;
    if (name == "medial") return Identity::medial;
    throw std::invalid_argument("unknown identity: " + name);
}

/// Exhaustive check over all variable assignments; O(n^2) for the binary
/// identities, O(n^4) for mediality, with early exit on the first witness.
inline bool satisfies_identity(const CayleyTable& t, Identity identity) {
    const int n = t.order();
    switch (identity) {
        case Identity::commutative:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (t.at(x, y) != t.at(y, x)) return false;
            return true;
        case Identity::left_symmetric:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (t.at(x, t.at(x, y)) != y) return false;
            return true;
        case Identity::right_symmetric:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (t.at(t.at(x, y), y) != x) return false;
            return true;
        case Identity::semi_symmetric:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (t.at(x, t.at(y, x)) != y) return false;
            return true;
        case Identity::medial:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int u = 0; u < n; ++u)
                        for (int v = 0; v < n; ++v)
                            if (t.at(t.at(x, y), t.at(u, v)) != t.at(t.at(x, u), t.at(y, v)))
                                return false;
            return true;
    }
    throw std::logic_error("bad identity");
}

} // namespace qsym
