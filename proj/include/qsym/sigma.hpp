#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

enum class SigmaLabel { id = 0, s = 1, l = 2, r = 3, sl = 4, sr = 5 };

/// An element of the symmetric group on the three positions {1,2,3} of a
/// triple x1*x2 = x3, stored 0-based.  s swaps positions 1,2; l swaps 1,3;
/// r swaps 2,3.  Composition convention: compose(a, b) applies b first,
/// then a.  Under that convention sl = compose(s, l) is the 3-cycle
/// (1 3 2) and sr = compose(s, r) is (1 2 3).
class Sigma {
public:
    constexpr Sigma(SigmaLabel label, std::array<int, 3> map) : label_(label), map_(map) {}

    static constexpr Sigma id() { return {SigmaLabel::id, {0, 1, 2}}; }
    static constexpr Sigma s() { return {SigmaLabel::s, {1, 0, 2}}; }
    static constexpr Sigma l() { return {SigmaLabel::l, {2, 1, 0}}; }
    static constexpr Sigma r() { return {SigmaLabel::r, {0, 2, 1}}; }
    static constexpr Sigma sl() { return {SigmaLabel::sl, {2, 0, 1}}; }
    static constexpr Sigma sr() { return {SigmaLabel::sr, {1, 2, 0}}; }

    static const std::array<Sigma, 6>& all() {
        static const std::array<Sigma, 6> table{id(), s(), l(), r(), sl(), sr()};
        return table;
    }

    SigmaLabel label() const { return label_; }
    int operator()(int position) const { return map_[position]; }

    std::string name() const {
        static const char* names[] = {"id", "s", "l", "r", "sl", "sr"};
        return names[static_cast<int>(label_)];
    }

    static Sigma from_name(const std::string& name) {
        for (const Sigma& sig : all())
            if (sig.name() == name) return sig;
        throw std::invalid_argument("unknown sigma label: " + name);
    }

    Sigma inverse() const {
        std::array<int, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[map_[i]] = i;
        return from_map(inv);
    }

    friend bool operator==(const Sigma& a, const Sigma& b) { return a.map_ == b.map_; }

    /// compose(a, b): apply b first, then a.
    friend Sigma compose(const Sigma& a, const Sigma& b) {
        std::array<int, 3> m{};
        for (int i = 0; i < 3; ++i) m[i] = a.map_[b.map_[i]];
        return from_map(m);
    }

private:
    static Sigma from_map(const std::array<int, 3>& m) {
        for (const Sigma& sig : all())
            if (sig.map_ == m) return sig;
        throw std::logic_error("not a permutation of three positions");
    }

    SigmaLabel label_;
    std::array<int, 3> map_;
};

/// A subset of the six parastrophy symmetries.  The subsets produced by
/// symmetry_group() are always subgroups of S3, hence one of exactly six
/// values.
class SymmetryGroup {
public:
    SymmetryGroup() : mask_(1) {}  // the identity is always a symmetry

    void insert(SigmaLabel label) { mask_ |= bit(label); }
    bool contains(SigmaLabel label) const { return mask_ & bit(label); }
    bool contains(const Sigma& sig) const { return contains(sig.label()); }

    int size() const {
        int c = 0;
        for (int i = 0; i < 6; ++i) c += (mask_ >> i) & 1;
        return c;
    }

    std::vector<Sigma> members() const {
        std::vector<Sigma> out;
        for (const Sigma& sig : Sigma::all())
            if (contains(sig)) out.push_back(sig);
        return out;
    }

    bool is_subgroup() const {
        for (const Sigma& a : Sigma::all())
            for (const Sigma& b : Sigma::all())
                if (contains(a) && contains(b) && !contains(compose(a, b))) return false;
        return contains(SigmaLabel::id);
    }

    friend bool operator==(const SymmetryGroup&, const SymmetryGroup&) = default;

private:
    static std::uint8_t bit(SigmaLabel label) {
        return static_cast<std::uint8_t>(1u << static_cast<int>(label));
    }

    std::uint8_t mask_;
};

/// The six classes of quasigroups by symmetry group.  The "strictly"
/// labels mean the symmetry group is exactly the named subgroup, not a
/// larger one.
enum class SymmetryClass {
    asymmetric,
    strictly_commutative,
    strictly_left_symmetric,
    strictly_right_symmetric,
    strictly_semi_symmetric,
    totally_symmetric,
};

inline std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::asymmetric: return "asymmetric";
        case SymmetryClass::strictly_commutative: return "strictly-commutative";
        case SymmetryClass::strictly_left_symmetric: return "strictly-left-symmetric";
        case SymmetryClass::strictly_right_symmetric: return "strictly-right-symmetric";
        case SymmetryClass::strictly_semi_symmetric: return "strictly-semi-symmetric";
        case SymmetryClass::totally_symmetric: return "totally-symmetric";
    }
    throw std::logic_error("bad symmetry class");
}

/// Two-letter tags used in census reports: cs, ls, rs, ts, ss, as.
inline std::string short_label(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::asymmetric: return "as";
        case SymmetryClass::strictly_commutative: return "cs";
        case SymmetryClass::strictly_left_symmetric: return "ls";
        case SymmetryClass::strictly_right_symmetric: return "rs";
        case SymmetryClass::strictly_semi_symmetric: return "ss";
        case SymmetryClass::totally_symmetric: return "ts";
    }
    throw std::logic_error("bad symmetry class");
}

inline SymmetryClass class_from_string(const std::string& name) {
    for (SymmetryClass c :
         {SymmetryClass::asymmetric, SymmetryClass::strictly_commutative,
          SymmetryClass::strictly_left_symmetric, SymmetryClass::strictly_right_symmetric,
          SymmetryClass::strictly_semi_symmetric, SymmetryClass::totally_symmetric})
        if (to_string(c) == name || short_label(c) == name) return c;
    throw std::invalid_argument("unknown symmetry class: " + name);
}

/// Maps each of the six subgroups of S3 to its class.
/// r fixes the table exactly for left symmetric quasigroups, l for right
/// symmetric ones.
inline SymmetryClass class_of(const SymmetryGroup& g) {
    if (!g.is_subgroup()) throw std::logic_error("symmetry set is not a subgroup of S3");
    const bool s = g.contains(SigmaLabel::s);
    const bool l = g.contains(SigmaLabel::l);
    const bool r = g.contains(SigmaLabel::r);
    const bool cyc = g.contains(SigmaLabel::sl);  // subgroup => sl and sr together
    if (s && l && r) return SymmetryClass::totally_symmetric;
    if (cyc) return SymmetryClass::strictly_semi_symmetric;
    if (s) return SymmetryClass::strictly_commutative;
    if (r) return SymmetryClass::strictly_left_symmetric;
    if (l) return SymmetryClass::strictly_right_symmetric;
    return SymmetryClass::asymmetric;
}

} // namespace qsym
