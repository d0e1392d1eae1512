#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/errors.hpp"
#include "qsym/group.hpp"
#include "qsym/permutation.hpp"

namespace qsym {

/// The unique expression t(x,y) = alpha(x) + a + beta(y) over a group
/// whose neutral element is the chosen zero, with alpha and beta fixing
/// that zero.
struct CanonicalDecomposition {
    GroupStructure group;
    Permutation alpha;
    Permutation beta;
    int free_member;  // a
    int zero;

    friend bool operator==(const CanonicalDecomposition&, const CanonicalDecomposition&) = default;
};

namespace detail {

/// Multiplication of the principal loop at z: x o y = t(Rz^-1 x, Lz^-1 y)
/// where Rz(x) = t(x, z) and Lz(y) = t(z, y).  Its identity is t(z, z).
inline std::vector<int> principal_loop_cells(const CayleyTable& t, int z) {
    const int n = t.order();
    std::vector<int> right_inv(n), left_inv(n);
    for (int x = 0; x < n; ++x) right_inv[t.at(x, z)] = x;
    for (int y = 0; y < n; ++y) left_inv[t.at(z, y)] = y;
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cells[static_cast<size_t>(x) * n + y] = t.at(right_inv[x], left_inv[y]);
    return cells;
}

inline bool cells_associative(const std::vector<int>& cells, int n) {
    auto at = [&](int x, int y) { return cells[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (at(at(x, y), z) != at(x, at(y, z))) return false;
    return true;
}

} // namespace detail

/// A quasigroup is a group isotope exactly when one principal loop is
/// associative: a loop isotopic to a group is itself a group, so a single
/// loop decides the question for the whole isotopy class.
inline bool is_group_isotope(const CayleyTable& t) {
    return detail::cells_associative(detail::principal_loop_cells(t, 0), t.order());
}

/// Computes the decomposition defined by the chosen zero:
///   a := zero*zero,
///   x o y := the principal loop at zero (its identity is a),
///   w := the o-inverse of zero,
///   x + y := x o w o y (a group with neutral zero),
///   alpha(x) := (x*zero) + (-a),   beta(y) := (-a) + (zero*y).
/// Every invariant is re-verified before returning; a verification failure
/// would contradict the uniqueness of canonical decompositions and is
/// raised as verification_failed.
inline CanonicalDecomposition canonical_decomposition(const CayleyTable& t, int zero) {
    const int n = t.order();
    if (zero < 0 || zero >= n) throw std::invalid_argument("zero element out of range");

    const std::vector<int> loop = detail::principal_loop_cells(t, zero);
    if (!detail::cells_associative(loop, n)) throw not_group_isotope();
    auto loop_at = [&](int x, int y) { return loop[static_cast<size_t>(x) * n + y]; };

    const int a = t.at(zero, zero);
    int w = -1;
    for (int v = 0; v < n; ++v)
        if (loop_at(zero, v) == a) {
            w = v;
            break;
        }
    if (w < 0) throw verification_failed("principal loop has no inverse for the zero element");

    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) cells[static_cast<size_t>(x) * n + y] = loop_at(loop_at(x, w), y);

    GroupStructure group = group_from_table(CayleyTable(n, std::move(cells)));
    if (group.neutral != zero) throw verification_failed("decomposition group neutral differs from zero");

    std::vector<int> alpha_images(n), beta_images(n);
    const int neg_a = group.neg(a);
    for (int x = 0; x < n; ++x) alpha_images[x] = group.add(t.at(x, zero), neg_a);
    for (int y = 0; y < n; ++y) beta_images[y] = group.add(neg_a, t.at(zero, y));
    Permutation alpha(std::move(alpha_images));
    Permutation beta(std::move(beta_images));

    if (alpha(zero) != zero || beta(zero) != zero)
        throw verification_failed("coefficients are not unitary");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.at(x, y) != group.add(group.add(alpha(x), a), beta(y)))
                throw verification_failed("alpha(x) + a + beta(y) does not reproduce the table");

    return CanonicalDecomposition{std::move(group), std::move(alpha), std::move(beta), a, zero};
}

/// Builds the table alpha(x) + a + beta(y) from unitary coefficients.
inline CayleyTable build_isotope(const GroupStructure& g, const Permutation& alpha, int a,
                                 const Permutation& beta) {
    const int n = g.order();
    if (alpha.size() != n || beta.size() != n)
        throw std::invalid_argument("coefficient size does not match the group order");
    if (a < 0 || a >= n) throw std::invalid_argument("free member out of range");
    if (alpha(g.neutral) != g.neutral) throw not_unitary("alpha");
    if (beta(g.neutral) != g.neutral) throw not_unitary("beta");
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cells[static_cast<size_t>(x) * n + y] = g.add(g.add(alpha(x), a), beta(y));
    return CayleyTable(n, std::move(cells));
}

struct AutotopismParts {
    Permutation theta;  // automorphism
    int b;
    int c;
};

/// Splits an autotopism (alpha, beta, gamma) of a group, i.e. a triple with
/// alpha(x) + beta(y) = gamma(x + y), into an automorphism theta and
/// elements b, c with
///   alpha = L_c . R_(-b) . theta,   beta = L_b . theta,   gamma = L_c . theta.
/// c and b are forced (c = gamma(e), b = beta(e)); all three equalities are
/// re-verified pointwise.
inline AutotopismParts decompose_autotopism(const GroupStructure& g, const Permutation& alpha,
                                            const Permutation& beta, const Permutation& gamma) {
    const int n = g.order();
    if (alpha.size() != n || beta.size() != n || gamma.size() != n)
        throw std::invalid_argument("autotopism components must match the group order");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g.add(alpha(x), beta(y)) != gamma(g.add(x, y))) throw not_autotopism(x, y);

    const int c = gamma(g.neutral);
    const int b = beta(g.neutral);
    std::vector<int> theta_images(n);
    for (int x = 0; x < n; ++x) theta_images[x] = g.add(g.neg(c), gamma(x));
    Permutation theta(std::move(theta_images));

    if (!is_automorphism(g, theta)) throw verification_failed("extracted theta is not an automorphism");
    for (int x = 0; x < n; ++x) {
        if (alpha(x) != g.add(g.add(c, theta(x)), g.neg(b)))
            throw verification_failed("alpha != L_c . R_(-b) . theta");
        if (beta(x) != g.add(b, theta(x))) throw verification_failed("beta != L_b . theta");
        if (gamma(x) != g.add(c, theta(x))) throw verification_failed("gamma != L_c . theta");
    }
    return AutotopismParts{std::move(theta), b, c};
}

/// A group isotope whose canonical coefficients are automorphisms of the
/// decomposition group.
inline bool is_linear_isotope(const CayleyTable& t) {
    if (!is_group_isotope(t)) return false;
    const CanonicalDecomposition d = canonical_decomposition(t, 0);
    return is_automorphism(d.group, d.alpha) && is_automorphism(d.group, d.beta);
}

/// A linear isotope of an abelian group.
inline bool is_T_quasigroup(const CayleyTable& t) {
    if (!is_group_isotope(t)) return false;
    const CanonicalDecomposition d = canonical_decomposition(t, 0);
    return d.group.abelian && is_automorphism(d.group, d.alpha) && is_automorphism(d.group, d.beta);
}

} // namespace qsym
