#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "qsym/qsym.hpp"
#include "support.hpp"

using namespace qsym;

TEST_CASE("linear isotope tables") {
    CHECK(test::lin(3, 1, 1, 0) == validate_quasigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    CHECK(test::lin(3, 2, 2, 1) == validate_quasigroup({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}));
    CHECK_THROWS_AS(linear_isotope_table({6, 2, 1, 0}), non_unit_coefficient);
    CHECK_THROWS_AS(linear_isotope_table({6, 1, 3, 0}), non_unit_coefficient);
}

TEST_CASE("canonical representative lists") {
    const auto m3 = canonical_representatives(3);
    const std::set<LinearIsotopeSpec> want3{
        {3, 1, 1, 0}, {3, 2, 2, 0}, {3, 1, 2, 0}, {3, 2, 1, 0}, {3, 2, 2, 1}};
    CHECK(std::set<LinearIsotopeSpec>(m3.begin(), m3.end()) == want3);

    CHECK(canonical_representatives(5).size() == 19);
    const auto m2 = canonical_representatives(2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == LinearIsotopeSpec{2, 1, 1, 0});

    CHECK_THROWS_AS(canonical_representatives(4), not_prime);
    for (int p : {2, 3, 5, 7, 11, 13})
        CHECK(static_cast<int>(canonical_representatives(p).size()) == p * p - p - 1);
}

TEST_CASE("square roots modulo p") {
    CHECK(sqrt_mod(4, 7) == 2);
    CHECK_FALSE(sqrt_mod(2, 5).has_value());
    CHECK(sqrt_mod(0, 11) == 0);
    CHECK(sqrt_mod(10, 13) == 6);  // the smaller of 6 and 7
    CHECK(sqrt_mod(18, 7) == 2);   // reduced mod p first
}

TEST_CASE("semi-symmetric representative sets") {
    const auto s7 = semi_symmetric_set(7);
    REQUIRE(s7.size() == 2);
    CHECK(s7[0] == LinearIsotopeSpec{7, 5, 3, 0});
    CHECK(s7[1] == LinearIsotopeSpec{7, 3, 5, 0});

    CHECK(semi_symmetric_set(5).empty());
    CHECK(semi_symmetric_set(11).empty());

    const auto s13 = semi_symmetric_set(13);
    REQUIRE(s13.size() == 2);
    CHECK(s13[0] == LinearIsotopeSpec{13, 10, 4, 0});
    CHECK(s13[1] == LinearIsotopeSpec{13, 4, 10, 0});

    CHECK_THROWS_AS(semi_symmetric_set(9), not_prime);
    CHECK_THROWS_AS(semi_symmetric_set(3), std::invalid_argument);
}

TEST_CASE("semi-symmetric members satisfy alpha*beta = 1 and alpha^3 = -1") {
    for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (const LinearIsotopeSpec& s : semi_symmetric_set(p)) {
            CHECK(s.alpha * s.beta % p == 1);
            CHECK(s.alpha * s.alpha % p * s.alpha % p == p - 1);
            CHECK(s.d == 0);
        }
}

TEST_CASE("prime censuses match the closed-form counts") {
    struct Expected {
        int p, cs, ls, rs, ts, ss, as, total;
    };
    const Expected table[] = {
        {5, 4, 4, 4, 1, 0, 6, 19},
        {7, 6, 6, 6, 1, 2, 20, 41},
        {11, 10, 10, 10, 1, 0, 78, 109},
    };
    for (const Expected& e : table) {
        const CensusReport r = census(e.p);
        const auto counts = r.counts();
        CHECK(r.total == e.total);
        CHECK(counts.at(SymmetryClass::strictly_commutative) == e.cs);
        CHECK(counts.at(SymmetryClass::strictly_left_symmetric) == e.ls);
        CHECK(counts.at(SymmetryClass::strictly_right_symmetric) == e.rs);
        CHECK(counts.at(SymmetryClass::totally_symmetric) == e.ts);
        CHECK(counts.at(SymmetryClass::strictly_semi_symmetric) == e.ss);
        CHECK(counts.at(SymmetryClass::asymmetric) == e.as);
    }
}

TEST_CASE("census rejects composites and tiny primes") {
    CHECK_THROWS_AS(census(4), not_prime);
    CHECK_THROWS_AS(census(3), std::invalid_argument);
}

TEST_CASE("census representative lists are sorted") {
    const CensusReport r = census(7);
    for (const auto& [cls, specs] : r.representatives)
        CHECK(std::is_sorted(specs.begin(), specs.end()));
    CHECK(r.k == 2);
}

TEST_CASE("latin square enumeration counts") {
    CHECK(enumerate_latin_squares(1).size() == 1);
    CHECK(enumerate_latin_squares(2).size() == 2);
    CHECK(enumerate_latin_squares(3).size() == 12);
    CHECK_THROWS_AS(enumerate_latin_squares(7), std::invalid_argument);
}

TEST_CASE("small order censuses") {
    const CensusReport two = small_order_census(2);
    CHECK(two.total == 1);
    REQUIRE(two.representatives.count(SymmetryClass::totally_symmetric) == 1);

    const CensusReport three = small_order_census(3);
    CHECK(three.total == 5);
    const auto counts = three.counts();
    CHECK(counts.at(SymmetryClass::strictly_commutative) == 1);
    CHECK(counts.at(SymmetryClass::strictly_left_symmetric) == 1);
    CHECK(counts.at(SymmetryClass::strictly_right_symmetric) == 1);
    CHECK(counts.at(SymmetryClass::totally_symmetric) == 2);
    CHECK(counts.at(SymmetryClass::asymmetric) == 0);

    CHECK_THROWS_AS(small_order_census(4), std::invalid_argument);
}

TEST_CASE("pairwise non-isomorphism checks") {
    CHECK(verify_pairwise_nonisomorphic(canonical_representatives(3)).ok);
    CHECK(verify_pairwise_nonisomorphic({{5, 1, 1, 0}}).ok);

    const NonIsomorphismReport bad = verify_pairwise_nonisomorphic({{5, 1, 1, 0}, {5, 1, 1, 1}});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness_pair.has_value());
    REQUIRE(bad.witness_isomorphism.has_value());
    CHECK(is_isomorphism(test::lin(5, 1, 1, 0), test::lin(5, 1, 1, 1), *bad.witness_isomorphism));

    CHECK_THROWS_AS(verify_pairwise_nonisomorphic({{5, 1, 1, 0}, {7, 1, 1, 0}}),
                    std::invalid_argument);
}

TEST_CASE("composite modulus enumeration is validated by brute force") {
    const ModulusEnumeration e4 = enumerate_modulus(4);
    CHECK(e4.validated);
    CHECK(e4.total_classes == 4);
    for (const auto& entry : e4.pairs) {
        CHECK(entry.canonical_d == std::vector<int>{0});
        // the divisor reading also offers d = gcd(mu, m), which collapses to 0
        CHECK_FALSE(entry.matches_divisor_reading);
    }

    const ModulusEnumeration e6 = enumerate_modulus(6);
    CHECK(e6.validated);
    CHECK(e6.total_classes == 5);
    for (const auto& entry : e6.pairs) {
        if (entry.alpha == 5 && entry.beta == 5) CHECK(entry.canonical_d == std::vector<int>{0, 1});
        else CHECK(entry.canonical_d == std::vector<int>{0});
    }
}

TEST_CASE("prime modulus enumeration uses the exact rule") {
    const ModulusEnumeration e7 = enumerate_modulus(7);
    CHECK(e7.prime);
    CHECK(e7.validated);
    CHECK(e7.total_classes == 41);
    for (const auto& entry : e7.pairs)
        CHECK(entry.canonical_d ==
              (entry.mu == 0 ? std::vector<int>{0, 1} : std::vector<int>{0}));
}

TEST_CASE("large composite moduli yield unvalidated candidates") {
    const ModulusEnumeration e12 = enumerate_modulus(12);
    CHECK_FALSE(e12.validated);
    CHECK(e12.pairs.size() == 16);  // four units
    for (const auto& entry : e12.pairs) CHECK(entry.canonical_d.empty());
}

TEST_CASE("semi-symmetric existence matches the quadratic residue test, small primes") {
    for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31})
        CHECK(semi_symmetric_set(p).empty() == !sqrt_mod(p - 3, p).has_value());
}
