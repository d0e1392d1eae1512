#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsym/decomposition.hpp"
#include "qsym/parastrophe.hpp"

namespace qsym {

/// Classification of a group isotope from its canonical decomposition,
/// with every individual criterion preserved for inspection.
struct CriteriaReport {
    SymmetryClass cls;
    std::map<std::string, bool> checks;
    /// The asymmetry condition as literally printed (a mixed and/or
    /// clause).  Diagnostic only: the class is always decided as the
    /// complement of the five symmetry cases.
    bool literal_asymmetric = false;
    /// Set when the classification was re-run for every choice of zero.
    std::optional<bool> zero_independent;
};

/// Decides the strict symmetry class of a decomposition alpha(x)+a+beta(y):
///   commutative      <=> abelian and beta = alpha
///   left symmetric   <=> abelian and beta = -i
///   right symmetric  <=> abelian and alpha = -i
///   totally symmetric<=> abelian and alpha = beta = -i
///   semi-symmetric   <=> alpha anti-automorphism, beta = alpha^-1,
///                        alpha^3 = -(I_a^-1), alpha(a) = -a
/// and asymmetric otherwise.  The strict labels exclude the totally
/// symmetric case; all permutation equalities are checked pointwise.
inline CriteriaReport classify_by_criteria(const CanonicalDecomposition& d) {
    const GroupStructure& g = d.group;
    const int n = g.order();
    const int a = d.free_member;

    const Permutation neg_id = g.negation();
    const bool abelian = g.abelian;
    const bool beta_eq_alpha = d.beta == d.alpha;
    const bool beta_eq_neg = d.beta == neg_id;
    const bool alpha_eq_neg = d.alpha == neg_id;
    const bool anti = is_anti_automorphism(g, d.alpha);
    const bool beta_eq_alpha_inv = d.beta == d.alpha.inverse();

    // alpha^3 = -(I_a^-1), i.e. alpha(alpha(alpha(x))) = -(a + x - a).
    bool cube_eq = true;
    for (int x = 0; x < n && cube_eq; ++x)
        cube_eq = d.alpha(d.alpha(d.alpha(x))) == g.neg(g.add(g.add(a, x), g.neg(a)));
    const bool alpha_a_eq_neg_a = d.alpha(a) == g.neg(a);

    const bool commutative = abelian && beta_eq_alpha;
    const bool left_sym = abelian && beta_eq_neg;
    const bool right_sym = abelian && alpha_eq_neg;
    const bool totally = abelian && alpha_eq_neg && beta_eq_neg;
    const bool semi = anti && beta_eq_alpha_inv && cube_eq && alpha_a_eq_neg_a;

    CriteriaReport report;
    report.checks = {
        {"abelian", abelian},
        {"beta-eq-alpha", beta_eq_alpha},
        {"beta-eq-neg-id", beta_eq_neg},
        {"alpha-eq-neg-id", alpha_eq_neg},
        {"alpha-anti-automorphism", anti},
        {"beta-eq-alpha-inverse", beta_eq_alpha_inv},
        {"alpha-cubed-eq-neg-inner-inverse", cube_eq},
        {"alpha-a-eq-neg-a", alpha_a_eq_neg_a},
    };
    report.literal_asymmetric =
        (!abelian || (!alpha_eq_neg && !beta_eq_alpha && !beta_eq_neg)) &&
        (!anti || !beta_eq_alpha_inv || !cube_eq || !alpha_a_eq_neg_a);

    if (totally) report.cls = SymmetryClass::totally_symmetric;
    else if (commutative) report.cls = SymmetryClass::strictly_commutative;
    else if (left_sym) report.cls = SymmetryClass::strictly_left_symmetric;
    else if (right_sym) report.cls = SymmetryClass::strictly_right_symmetric;
    else if (semi) report.cls = SymmetryClass::strictly_semi_symmetric;
    else report.cls = SymmetryClass::asymmetric;
    return report;
}

/// Decomposes at zero 0, classifies, and records whether every other
/// choice of zero yields the same class.
inline CriteriaReport classify_table(const CayleyTable& t) {
    CriteriaReport report = classify_by_criteria(canonical_decomposition(t, 0));
    bool independent = true;
    for (int z = 1; z < t.order() && independent; ++z)
        independent = classify_by_criteria(canonical_decomposition(t, z)).cls == report.cls;
    report.zero_independent = independent;
    return report;
}

struct CrossCheckReport {
    SymmetryClass oracle;
    std::optional<SymmetryClass> criteria;  // nullopt when not a group isotope
    bool zero_independent = true;
    bool agree = true;
};

/// Runs both classification paths.  For group isotopes the criteria are
/// evaluated at every zero; any zero-dependence or any difference from the
/// parastrophe oracle counts as disagreement.  Tables that are not group
/// isotopes carry only the oracle class.
inline CrossCheckReport cross_check(const CayleyTable& t) {
    CrossCheckReport report{classify_by_oracle(t), std::nullopt, true, true};
    if (!is_group_isotope(t)) return report;
    for (int z = 0; z < t.order(); ++z) {
        const SymmetryClass c = classify_by_criteria(canonical_decomposition(t, z)).cls;
        if (!report.criteria) report.criteria = c;
        else if (*report.criteria != c) report.zero_independent = false;
        if (c != report.oracle) report.agree = false;
    }
    if (!report.zero_independent) report.agree = false;
    return report;
}

struct CorollaryReport {
    struct Item {
        std::string name;
        bool applicable;
        bool holds;  // true whenever not applicable
    };
    std::vector<Item> items;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Evaluates the classification corollaries as implications on one table.
/// A violation would falsify a theorem, so it indicates a bug, never a
/// property of the data.
///   - a linear isotope classified commutative / left / right / totally
///     symmetric is medial;
///   - a nonmedial T-quasigroup is asymmetric;
///   - over an abelian decomposition group, the semi-symmetry criterion
///     with "anti-automorphism, -(I_a^-1)" coincides with the specialized
///     one using "automorphism, -i".
inline CorollaryReport check_corollaries(const CayleyTable& t) {
    if (!is_group_isotope(t)) throw not_group_isotope();
    const CanonicalDecomposition d = canonical_decomposition(t, 0);
    const GroupStructure& g = d.group;
    const int n = g.order();

    const bool linear = is_automorphism(g, d.alpha) && is_automorphism(g, d.beta);
    const bool t_quasigroup = linear && g.abelian;
    const bool medial = satisfies_identity(t, Identity::medial);
    const CriteriaReport criteria = classify_by_criteria(d);
    const SymmetryClass cls = criteria.cls;
    const bool symmetric_four = cls == SymmetryClass::strictly_commutative ||
                                cls == SymmetryClass::strictly_left_symmetric ||
                                cls == SymmetryClass::strictly_right_symmetric ||
                                cls == SymmetryClass::totally_symmetric;

    CorollaryReport report;
    auto add = [&report](const std::string& name, bool applicable, bool holds) {
        report.items.push_back({name, applicable, !applicable || holds});
        if (applicable && !holds) report.violations.push_back(name);
    };

    add("symmetric-linear-isotopes-are-medial", linear && symmetric_four, medial);
    add("nonmedial-T-quasigroup-is-asymmetric", t_quasigroup && !medial,
        cls == SymmetryClass::asymmetric);

    bool specializations_agree = true;
    if (g.abelian) {
        const Permutation neg_id = g.negation();
        bool cube_eq_neg = true;
        for (int x = 0; x < n && cube_eq_neg; ++x)
            cube_eq_neg = d.alpha(d.alpha(d.alpha(x))) == neg_id(x);
        const bool abelian_semi = is_automorphism(g, d.alpha) && d.beta == d.alpha.inverse() &&
                                  cube_eq_neg && d.alpha(d.free_member) == g.neg(d.free_member);
        const bool general_semi = criteria.checks.at("alpha-anti-automorphism") &&
                                  criteria.checks.at("beta-eq-alpha-inverse") &&
                                  criteria.checks.at("alpha-cubed-eq-neg-inner-inverse") &&
                                  criteria.checks.at("alpha-a-eq-neg-a");
        specializations_agree = abelian_semi == general_semi;
    }
    add("abelian-semi-symmetry-specialization", g.abelian, specializations_agree);
    return report;
}

} // namespace qsym
