#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/classifier.hpp"
#include "qsym/errors.hpp"
#include "qsym/isotopy.hpp"

namespace qsym {

/// The operation x o y = alpha*x + beta*y + d on Z_m, with alpha and beta
/// units of the ring Z_m.
struct LinearIsotopeSpec {
    int m;
    int alpha;
    int beta;
    int d;

    /// mu = alpha + beta - 1 (mod m); d classes modulo m are translates by
    /// multiples of mu.
    int mu() const { return ((alpha + beta - 1) % m + m) % m; }

    auto operator<=>(const LinearIsotopeSpec&) const = default;
};

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline CayleyTable linear_isotope_table(const LinearIsotopeSpec& spec) {
    const int m = spec.m;
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (std::gcd(((spec.alpha % m) + m) % m, m) != 1) throw non_unit_coefficient(spec.alpha, m);
    if (std::gcd(((spec.beta % m) + m) % m, m) != 1) throw non_unit_coefficient(spec.beta, m);
    std::vector<int> cells(static_cast<size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            cells[static_cast<size_t>(x) * m + y] =
                (((spec.alpha * x + spec.beta * y + spec.d) % m) + m) % m;
    return CayleyTable(m, std::move(cells));
}

/// The canonical list for prime p:
///   M0 = {(alpha, beta, 0) : alpha, beta in 1..p-1}
///   M1 = {(alpha, 1-alpha, 1) : alpha in 2..p-1}
/// Exactly one representative per isomorphism class; |M0|+|M1| = p^2-p-1.
inline std::vector<LinearIsotopeSpec> canonical_representatives(int p) {
    if (!is_prime(p)) throw not_prime(p);
    std::vector<LinearIsotopeSpec> out;
    out.reserve(static_cast<size_t>(p) * p);
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b) out.push_back({p, a, b, 0});
    for (int a = 2; a < p; ++a) out.push_back({p, a, ((1 - a) % p + p) % p, 1});
    return out;
}

/// Smallest k in 1..p-1 with k^2 = n (mod p), or nullopt if n is not a
/// quadratic residue.  By convention sqrt_mod(0, p) = 0.
inline std::optional<int> sqrt_mod(int n, int p) {
    const int target = ((n % p) + p) % p;
    if (target == 0) return 0;
    for (int k = 1; k < p; ++k)
        if (k * k % p == target) return k;
    return std::nullopt;
}

namespace detail {

inline int mod_inverse(int a, int p) {
    const int an = ((a % p) + p) % p;
    for (int x = 1; x < p; ++x)
        if (an * x % p == 1) return x;
    throw non_unit_coefficient(a, p);
}

} // namespace detail

/// The strictly semi-symmetric representatives of prime order p > 3:
/// empty unless p-3 is a quadratic residue; otherwise, with k its root,
///   {((1+k)/2, 2/(1+k), 0), ((1-k)/2, 2/(1-k), 0)}.
/// Each returned spec is re-verified against the identity x(yx) = y.
inline std::vector<LinearIsotopeSpec> semi_symmetric_set(int p) {
    if (!is_prime(p)) throw not_prime(p);
    if (p <= 3) throw std::invalid_argument("semi_symmetric_set requires p > 3");
    const std::optional<int> k = sqrt_mod(p - 3, p);
    if (!k) return {};
    const int half = detail::mod_inverse(2, p);
    auto member = [&](int sign) -> LinearIsotopeSpec {
        const int one_pm_k = (((1 + sign * *k) % p) + p) % p;
        const int alpha = (one_pm_k * half) % p;
        const int beta = (2 * detail::mod_inverse(one_pm_k, p)) % p;
        return {p, alpha, beta, 0};
    };
    std::vector<LinearIsotopeSpec> out{member(+1), member(-1)};
    if (out[0] == out[1]) throw internal_mismatch("the two semi-symmetric members coincide");
    for (const LinearIsotopeSpec& spec : out)
        if (!satisfies_identity(linear_isotope_table(spec), Identity::semi_symmetric))
            throw internal_mismatch("semi-symmetric member fails x(yx) = y");
    return out;
}

/// Per-class representatives and counts for one prime order.
struct CensusReport {
    int p = 0;
    std::optional<int> k;  // root of p-3 when it exists (p > 3 only)
    std::map<SymmetryClass, std::vector<LinearIsotopeSpec>> representatives;
    int total = 0;

    std::map<SymmetryClass, int> counts() const {
        std::map<SymmetryClass, int> out;
        for (SymmetryClass c :
             {SymmetryClass::strictly_commutative, SymmetryClass::strictly_left_symmetric,
              SymmetryClass::strictly_right_symmetric, SymmetryClass::totally_symmetric,
              SymmetryClass::strictly_semi_symmetric, SymmetryClass::asymmetric}) {
            auto it = representatives.find(c);
            out[c] = it == representatives.end() ? 0 : static_cast<int>(it->second.size());
        }
        return out;
    }
};

namespace detail {

inline std::string spec_to_string(const LinearIsotopeSpec& s) {
    std::ostringstream os;
    os << "(" << s.alpha << "," << s.beta << "," << s.d << ")";
    return os.str();
}

/// The closed-form partition of the canonical representatives for p > 3:
///   cs: (a,a,0), a=1..p-2, and (1/2, 1/2, 1)
///   ls: (a,p-1,0), a=1..p-2, and (2, p-1, 1)
///   rs: (p-1,b,0), b=1..p-2, and (p-1, 2, 1)
///   ts: (p-1,p-1,0)
///   ss: the quadratic-residue pair with d=0, when it exists
///   as: everything else.
inline std::map<SymmetryClass, std::set<LinearIsotopeSpec>> expected_census_sets(int p) {
    std::map<SymmetryClass, std::set<LinearIsotopeSpec>> out;
    const int half = mod_inverse(2, p);

    auto& cs = out[SymmetryClass::strictly_commutative];
    for (int a = 1; a <= p - 2; ++a) cs.insert({p, a, a, 0});
    cs.insert({p, half, half, 1});

    auto& ls = out[SymmetryClass::strictly_left_symmetric];
    for (int a = 1; a <= p - 2; ++a) ls.insert({p, a, p - 1, 0});
    ls.insert({p, 2, p - 1, 1});

    auto& rs = out[SymmetryClass::strictly_right_symmetric];
    for (int b = 1; b <= p - 2; ++b) rs.insert({p, p - 1, b, 0});
    rs.insert({p, p - 1, 2, 1});

    out[SymmetryClass::totally_symmetric].insert({p, p - 1, p - 1, 0});

    auto& ss = out[SymmetryClass::strictly_semi_symmetric];
    for (const LinearIsotopeSpec& spec : semi_symmetric_set(p)) ss.insert(spec);

    auto& as = out[SymmetryClass::asymmetric];
    for (int a = 3; a <= p - 2; ++a) {
        if (2 * a % p == (p + 1) % p) continue;  // a = (p+1)/2 is the commutative M1 member
        as.insert({p, a, ((1 - a) % p + p) % p, 1});
    }
    for (int a = 1; a <= p - 2; ++a)
        for (int b = 1; b <= p - 2; ++b) {
            if (a == b) continue;
            const LinearIsotopeSpec spec{p, a, b, 0};
            if (!ss.count(spec)) as.insert(spec);
        }
    return out;
}

} // namespace detail

/// Classifies every canonical representative of prime order p > 3 and
/// verifies the outcome against the closed-form sets and counts
///   (p-1, p-1, p-1, 1, {0|2}, (p-2)^2-{3|5}).
/// Any deviation is raised as internal_mismatch.
inline CensusReport census(int p) {
    if (!is_prime(p)) throw not_prime(p);
    if (p <= 3) throw std::invalid_argument("census requires p > 3; use small_order_census");

    CensusReport report;
    report.p = p;
    report.k = sqrt_mod(p - 3, p);

    for (const LinearIsotopeSpec& spec : canonical_representatives(p)) {
        const SymmetryClass c = classify_table(linear_isotope_table(spec)).cls;
        report.representatives[c].push_back(spec);
        ++report.total;
    }
    for (auto& [c, specs] : report.representatives) std::sort(specs.begin(), specs.end());

    if (report.total != p * p - p - 1)
        throw internal_mismatch("census total differs from p^2-p-1");

    const auto expected = detail::expected_census_sets(p);
    for (const auto& [c, want] : expected) {
        const auto it = report.representatives.find(c);
        const std::vector<LinearIsotopeSpec> got =
            it == report.representatives.end() ? std::vector<LinearIsotopeSpec>{} : it->second;
        if (!std::equal(got.begin(), got.end(), want.begin(), want.end()) ||
            got.size() != want.size()) {
            std::string diff;
            for (const auto& s : got)
                if (!want.count(s)) diff += " +" + detail::spec_to_string(s);
            for (const auto& s : want)
                if (!std::binary_search(got.begin(), got.end(), s)) diff += " -" + detail::spec_to_string(s);
            throw internal_mismatch("census block " + to_string(c) +
                                    " differs from the closed form:" + diff);
        }
    }

    const auto counts = report.counts();
    const bool residue = report.k.has_value();
    const int expected_as = (p - 2) * (p - 2) - (residue ? 5 : 3);
    if (counts.at(SymmetryClass::strictly_commutative) != p - 1 ||
        counts.at(SymmetryClass::strictly_left_symmetric) != p - 1 ||
        counts.at(SymmetryClass::strictly_right_symmetric) != p - 1 ||
        counts.at(SymmetryClass::totally_symmetric) != 1 ||
        counts.at(SymmetryClass::strictly_semi_symmetric) != (residue ? 2 : 0) ||
        counts.at(SymmetryClass::asymmetric) != expected_as)
        throw internal_mismatch("census counts differ from the closed-form formulas");
    return report;
}

/// All Latin squares of a small order, by row-wise backtracking.  Only
/// needed for the exhaustive order-2/3 classification, so the order is
/// capped defensively.
inline std::vector<CayleyTable> enumerate_latin_squares(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("latin-square enumeration is capped at order 4");
    std::vector<CayleyTable> out;
    std::vector<int> cells(static_cast<size_t>(n) * n, -1);
    std::vector<std::vector<char>> col_used(n, std::vector<char>(n, 0));

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n * n) {
            out.emplace_back(n, cells);
            return;
        }
        const int x = pos / n, y = pos % n;
        std::vector<char> row_used(n, 0);
        for (int yy = 0; yy < y; ++yy) row_used[cells[static_cast<size_t>(x) * n + yy]] = 1;
        for (int v = 0; v < n; ++v) {
            if (row_used[v] || col_used[y][v]) continue;
            cells[static_cast<size_t>(x) * n + y] = v;
            col_used[y][v] = 1;
            self(self, pos + 1);
            col_used[y][v] = 0;
        }
        cells[static_cast<size_t>(x) * n + y] = -1;
    };
    rec(rec, 0);
    return out;
}

/// Exhaustive classification of the orders 2 and 3: every Latin square is
/// matched (by isomorphism search) against the canonical representatives,
/// each square must hit exactly one, and every representative is hit.
inline CensusReport small_order_census(int n) {
    if (n != 2 && n != 3) throw std::invalid_argument("small_order_census handles orders 2 and 3");

    const std::vector<LinearIsotopeSpec> reps =
        n == 2 ? std::vector<LinearIsotopeSpec>{{2, 1, 1, 0}}
               : std::vector<LinearIsotopeSpec>{{3, 1, 1, 0}, {3, 1, 2, 0}, {3, 2, 1, 0},
                                                {3, 2, 2, 0}, {3, 2, 2, 1}};
    std::vector<CayleyTable> rep_tables;
    rep_tables.reserve(reps.size());
    for (const auto& spec : reps) rep_tables.push_back(linear_isotope_table(spec));

    std::vector<int> hits(reps.size(), 0);
    for (const CayleyTable& square : enumerate_latin_squares(n)) {
        int matched = -1;
        for (size_t i = 0; i < reps.size(); ++i) {
            if (find_isomorphism(square, rep_tables[i])) {
                if (matched >= 0)
                    throw internal_mismatch("an order-" + std::to_string(n) +
                                            " square matches two representatives");
                matched = static_cast<int>(i);
            }
        }
        if (matched < 0)
            throw internal_mismatch("an order-" + std::to_string(n) +
                                    " square matches no representative");
        ++hits[matched];
    }
    for (size_t i = 0; i < hits.size(); ++i)
        if (hits[i] == 0) throw internal_mismatch("representative never matched");

    CensusReport report;
    report.p = n;
    for (size_t i = 0; i < reps.size(); ++i) {
        const SymmetryClass c = classify_table(rep_tables[i]).cls;
        report.representatives[c].push_back(reps[i]);
        ++report.total;
    }
    for (auto& [c, specs] : report.representatives) std::sort(specs.begin(), specs.end());
    return report;
}

struct NonIsomorphismReport {
    bool ok = true;
    std::optional<std::pair<LinearIsotopeSpec, LinearIsotopeSpec>> witness_pair;
    std::optional<Permutation> witness_isomorphism;
};

/// True iff no two distinct specs generate isomorphic tables; on failure
/// the offending pair and its isomorphism are returned.
inline NonIsomorphismReport verify_pairwise_nonisomorphic(const std::vector<LinearIsotopeSpec>& specs) {
    for (size_t i = 1; i < specs.size(); ++i)
        if (specs[i].m != specs[0].m)
            throw std::invalid_argument("specs must share one modulus");
    std::vector<CayleyTable> tables;
    tables.reserve(specs.size());
    for (const auto& spec : specs) tables.push_back(linear_isotope_table(spec));
    for (size_t i = 0; i < specs.size(); ++i)
        for (size_t j = i + 1; j < specs.size(); ++j)
            if (auto phi = find_isomorphism(tables[i], tables[j]))
                return {false, std::make_pair(specs[i], specs[j]), std::move(phi)};
    return {};
}

/// Isomorphism reduction of all linear isotopes of Z_m, for general m.
struct ModulusEnumeration {
    struct PairEntry {
        int alpha = 0;
        int beta = 0;
        int mu = 0;   // alpha + beta - 1 (mod m)
        int g = 0;    // gcd(mu, m), with gcd(0, m) = m
        /// d values under the reading "0 and the positive common divisors
        /// of mu and m below m".
        std::vector<int> divisor_reading_d;
        /// d values that actually survive isomorphism reduction (filled
        /// when validated).
        std::vector<int> canonical_d;
        bool matches_divisor_reading = false;
    };

    int m = 0;
    bool prime = false;
    /// True when canonical_d was established exactly: via the prime-order
    /// rule, or by brute-force reduction (composite m <= 8).
    bool validated = false;
    std::vector<PairEntry> pairs;
    int total_classes = 0;
};

/// Enumerates canonical d values per unit pair (alpha, beta).  For primes
/// the rule is exact: d = 0 when mu != 0, else d in {0, 1}.  For composite
/// m <= 8 the whole grid is reduced by exhaustive isomorphism search.  The
/// divisor-based reading is reported alongside for comparison; it is known
/// to overcount (its d = gcd(mu, m) candidate collapses onto d = 0).
inline ModulusEnumeration enumerate_modulus(int m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    ModulusEnumeration result;
    result.m = m;
    result.prime = is_prime(m);

    std::vector<int> units;
    for (int u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) units.push_back(u);

    for (int a : units)
        for (int b : units) {
            ModulusEnumeration::PairEntry entry;
            entry.alpha = a;
            entry.beta = b;
            entry.mu = ((a + b - 1) % m + m) % m;
            entry.g = entry.mu == 0 ? m : std::gcd(entry.mu, m);
            entry.divisor_reading_d.push_back(0);
            for (int e = 1; e < m; ++e)
                if (entry.g % e == 0) entry.divisor_reading_d.push_back(e);
            result.pairs.push_back(std::move(entry));
        }

    if (result.prime) {
        for (auto& entry : result.pairs) {
            entry.canonical_d = entry.mu == 0 ? std::vector<int>{0, 1} : std::vector<int>{0};
            entry.matches_divisor_reading = entry.canonical_d == entry.divisor_reading_d;
            result.total_classes += static_cast<int>(entry.canonical_d.size());
        }
        result.validated = true;
        return result;
    }

    if (m > 8) return result;  // candidates only, not validated

    // Brute-force reduction over the full grid.
    std::vector<LinearIsotopeSpec> grid;
    std::vector<CayleyTable> tables;
    for (int a : units)
        for (int b : units)
            for (int d = 0; d < m; ++d) {
                grid.push_back({m, a, b, d});
                tables.push_back(linear_isotope_table(grid.back()));
            }
    std::vector<int> cls(grid.size(), -1);
    std::vector<size_t> class_leaders;
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t leader : class_leaders)
            if (find_isomorphism(tables[leader], tables[i])) {
                cls[i] = cls[leader];
                break;
            }
        if (cls[i] < 0) {
            cls[i] = static_cast<int>(class_leaders.size());
            class_leaders.push_back(i);
        }
    }
    result.total_classes = static_cast<int>(class_leaders.size());
    for (auto& entry : result.pairs)
        for (size_t leader : class_leaders)
            if (grid[leader].alpha == entry.alpha && grid[leader].beta == entry.beta)
                entry.canonical_d.push_back(grid[leader].d);
    for (auto& entry : result.pairs) {
        std::sort(entry.canonical_d.begin(), entry.canonical_d.end());
        entry.matches_divisor_reading = entry.canonical_d == entry.divisor_reading_d;
    }
    result.validated = true;
    return result;
}

} // namespace qsym
