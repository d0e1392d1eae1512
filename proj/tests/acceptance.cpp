// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance here is exact integer equality; the reference
// values are closed-form counts and hand-verified small cases.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/qsym.hpp"
#include "support.hpp"

using namespace qsym;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

bool order3_census(std::string& detail) {
    if (enumerate_latin_squares(3).size() != 12) {
        detail = "expected 12 order-3 Latin squares";
        return false;
    }
    const CensusReport r = small_order_census(3);
    const auto counts = r.counts();
    const std::set<LinearIsotopeSpec> ts(
        r.representatives.at(SymmetryClass::totally_symmetric).begin(),
        r.representatives.at(SymmetryClass::totally_symmetric).end());
    return r.total == 5 && counts.at(SymmetryClass::strictly_commutative) == 1 &&
           counts.at(SymmetryClass::strictly_left_symmetric) == 1 &&
           counts.at(SymmetryClass::strictly_right_symmetric) == 1 &&
           counts.at(SymmetryClass::totally_symmetric) == 2 &&
           counts.at(SymmetryClass::asymmetric) == 0 &&
           counts.at(SymmetryClass::strictly_semi_symmetric) == 0 &&
           r.representatives.at(SymmetryClass::strictly_commutative) ==
               std::vector<LinearIsotopeSpec>{{3, 1, 1, 0}} &&
           r.representatives.at(SymmetryClass::strictly_left_symmetric) ==
               std::vector<LinearIsotopeSpec>{{3, 1, 2, 0}} &&
           r.representatives.at(SymmetryClass::strictly_right_symmetric) ==
               std::vector<LinearIsotopeSpec>{{3, 2, 1, 0}} &&
           ts == std::set<LinearIsotopeSpec>{{3, 2, 2, 0}, {3, 2, 2, 1}};
}

bool order2_isotopes(std::string& detail) {
    const CayleyTable plain = test::lin(2, 1, 1, 0);
    const CayleyTable shifted = test::lin(2, 1, 1, 1);
    const auto phi = find_isomorphism(plain, shifted);
    if (!phi || phi->images() != std::vector<int>{1, 0}) {
        detail = "expected the isomorphism x -> x+1";
        return false;
    }
    return classify_by_oracle(plain) == SymmetryClass::totally_symmetric &&
           classify_by_oracle(shifted) == SymmetryClass::totally_symmetric &&
           small_order_census(2).total == 1;
}

bool prime_censuses(std::string& detail) {
    struct Row {
        int p, cs, ls, rs, ts, ss, as, total;
    };
    const Row rows[] = {
        {5, 4, 4, 4, 1, 0, 6, 19},
        {7, 6, 6, 6, 1, 2, 20, 41},
        {11, 10, 10, 10, 1, 0, 78, 109},
        {13, 12, 12, 12, 1, 2, 116, 155},
    };
    for (const Row& row : rows) {
        const CensusReport r = census(row.p);
        const auto counts = r.counts();
        const bool ok = r.total == row.total && r.total == row.p * row.p - row.p - 1 &&
                        counts.at(SymmetryClass::strictly_commutative) == row.cs &&
                        counts.at(SymmetryClass::strictly_left_symmetric) == row.ls &&
                        counts.at(SymmetryClass::strictly_right_symmetric) == row.rs &&
                        counts.at(SymmetryClass::totally_symmetric) == row.ts &&
                        counts.at(SymmetryClass::strictly_semi_symmetric) == row.ss &&
                        counts.at(SymmetryClass::asymmetric) == row.as;
        if (!ok) {
            detail = "count mismatch at p = " + std::to_string(row.p);
            return false;
        }
    }
    return true;
}

bool semi_symmetric_seven(std::string& detail) {
    const auto set7 = semi_symmetric_set(7);
    const std::set<LinearIsotopeSpec> got(set7.begin(), set7.end());
    if (got != std::set<LinearIsotopeSpec>{{7, 5, 3, 0}, {7, 3, 5, 0}}) {
        detail = "expected {(5,3,0), (3,5,0)}";
        return false;
    }
    for (const LinearIsotopeSpec& s : set7)
        if (!satisfies_identity(linear_isotope_table(s), Identity::semi_symmetric)) {
            detail = "member fails x(yx) = y";
            return false;
        }
    return true;
}

bool rado_echo(std::string& detail) {
    for (int p = 5; p < 100; ++p) {
        if (!is_prime(p)) continue;
        // independent sweep: strictly semi-symmetric tables (alpha, beta, 0)
        // by the parastrophe oracle alone
        std::set<LinearIsotopeSpec> by_oracle;
        for (int a = 1; a < p; ++a)
            for (int b = 1; b < p; ++b)
                if (classify_by_oracle(test::lin(p, a, b, 0)) ==
                    SymmetryClass::strictly_semi_symmetric)
                    by_oracle.insert({p, a, b, 0});
        const bool residue = sqrt_mod(p - 3, p).has_value();
        if (by_oracle.empty() == residue) {
            detail = "existence mismatch at p = " + std::to_string(p);
            return false;
        }
        const auto formula = semi_symmetric_set(p);
        if (by_oracle != std::set<LinearIsotopeSpec>(formula.begin(), formula.end())) {
            detail = "set mismatch at p = " + std::to_string(p);
            return false;
        }
    }
    return true;
}

bool oracle_criteria_equivalence(std::string& detail) {
    for (int m = 2; m <= 9; ++m)
        for (int a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            for (int b = 1; b < m; ++b) {
                if (std::gcd(b, m) != 1) continue;
                for (int d = 0; d < m; ++d) {
                    const CayleyTable t = test::lin(m, a, b, d);
                    const SymmetryClass oracle = classify_by_oracle(t);
                    for (int z = 0; z < m; ++z)
                        if (classify_by_criteria(canonical_decomposition(t, z)).cls != oracle) {
                            detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) +
                                     "," + std::to_string(d) + ") mod " + std::to_string(m) +
                                     ", zero " + std::to_string(z);
                            return false;
                        }
                    const CriteriaReport r = classify_table(t);
                    if (r.cls != oracle || !r.zero_independent.value_or(false)) {
                        detail = "classify_table disagrees";
                        return false;
                    }
                }
            }
        }
    return true;
}

bool nonmedial_T_quasigroup(std::string& detail) {
    const GroupStructure z33 = direct_product(cyclic_group(3), cyclic_group(3));
    const auto autos = test::all_automorphisms(z33);
    if (autos.size() != 48) {
        detail = "expected |GL(2,3)| = 48 automorphisms";
        return false;
    }
    for (size_t i = 0; i < autos.size(); ++i)
        for (size_t j = i + 1; j < autos.size(); ++j) {
            if (compose(autos[i], autos[j]) == compose(autos[j], autos[i])) continue;
            const CayleyTable t = build_isotope(z33, autos[i], 0, autos[j]);
            const bool ok = is_T_quasigroup(t) && !satisfies_identity(t, Identity::medial) &&
                            classify_table(t).cls == SymmetryClass::asymmetric &&
                            classify_by_oracle(t) == SymmetryClass::asymmetric;
            if (!ok) detail = "a noncommuting pair broke the corollary";
            return ok;
        }
    detail = "no noncommuting automorphism pair found";
    return false;
}

bool noncommutative_dichotomy(std::string& detail) {
    std::mt19937 rng(20240817);
    const GroupStructure s3 = symmetric_group3();
    for (int i = 0; i < 1000; ++i) {
        const CayleyTable t = random_group_isotope(rng, s3);
        const SymmetryClass c = classify_table(t).cls;
        if (c != SymmetryClass::strictly_semi_symmetric && c != SymmetryClass::asymmetric) {
            detail = "sample " + std::to_string(i) + " classified " + to_string(c);
            return false;
        }
        if (classify_by_oracle(t) != c) {
            detail = "oracle disagrees on sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool pairwise_nonisomorphic_p5(std::string& detail) {
    const auto reps = canonical_representatives(5);
    if (reps.size() != 19) {
        detail = "expected 19 representatives";
        return false;
    }
    const NonIsomorphismReport r = verify_pairwise_nonisomorphic(reps);
    if (!r.ok && r.witness_pair) {
        std::ostringstream os;
        os << "isomorphic pair (" << r.witness_pair->first.alpha << ","
           << r.witness_pair->first.beta << "," << r.witness_pair->first.d << ") ~ ("
           << r.witness_pair->second.alpha << "," << r.witness_pair->second.beta << ","
           << r.witness_pair->second.d << ")";
        detail = os.str();
    }
    return r.ok;
}

bool decomposition_round_trip(std::string& detail) {
    std::mt19937 rng(424243);
    std::vector<GroupStructure> groups;
    for (int n = 2; n <= 8; ++n) groups.push_back(cyclic_group(n));
    groups.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    groups.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
    groups.push_back(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
    groups.push_back(symmetric_group3());
    groups.push_back(dihedral_group(4));
    groups.push_back(quaternion_group8());

    std::uniform_int_distribution<size_t> pick(0, groups.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const GroupStructure& g = groups[pick(rng)];
        std::uniform_int_distribution<int> member(0, g.order() - 1);
        const Permutation alpha = random_unitary_permutation(rng, g.order(), g.neutral);
        const Permutation beta = random_unitary_permutation(rng, g.order(), g.neutral);
        const int a = member(rng);
        const CanonicalDecomposition d =
            canonical_decomposition(build_isotope(g, alpha, a, beta), g.neutral);
        if (!(d.group.table == g.table && d.alpha == alpha && d.beta == beta &&
              d.free_member == a && d.zero == g.neutral)) {
            detail = "round trip failed on sample " + std::to_string(i) + " (order " +
                     std::to_string(g.order()) + ")";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "order-3 census: 12 squares, 5 classes (1 cs, 1 ls, 1 rs, 2 ts)", order3_census);
    criterion(2, "order-2 isotopes isomorphic via x+1, totally symmetric", order2_isotopes);
    criterion(3, "prime censuses p in {5,7,11,13}: totals 19/41/109/155 and class counts",
              prime_censuses);
    criterion(4, "semi-symmetric set at p=7 is {(5,3,0),(3,5,0)}, oracle-verified",
              semi_symmetric_seven);
    criterion(5, "Rado echo for primes 5 <= p < 100: existence iff p-3 is a residue", rado_echo);
    criterion(6, "oracle/criteria agreement for all linear isotopes of Z_2..Z_9, every zero",
              oracle_criteria_equivalence);
    criterion(7, "nonmedial T-quasigroup over Z_3 x Z_3 is asymmetric by both paths",
              nonmedial_T_quasigroup);
    criterion(8, "1000 random isotopes of S_3: semi-symmetric or asymmetric only",
              noncommutative_dichotomy);
    criterion(9, "the 19 canonical representatives at p=5 are pairwise non-isomorphic",
              pairwise_nonisomorphic_p5);
    criterion(10, "500 random build/decompose round trips over groups of order <= 8",
              decomposition_round_trip);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
