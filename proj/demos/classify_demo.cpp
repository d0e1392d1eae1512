// Library walkthrough: build a linear isotope, look at its parastrophes,
// decompose it, classify it both ways.

#include <iostream>

#include "qsym/qsym.hpp"

int main() {
    using namespace qsym;

    // x o y = 5x + 3y (mod 7): fixed by both 3-cycles of S3, nothing else.
    const CayleyTable t = linear_isotope_table({7, 5, 3, 0});

    std::cout << "table:\n" << to_text(t);
    std::cout << "satisfies x(yx) = y: "
              << (satisfies_identity(t, Identity::semi_symmetric) ? "yes" : "no") << "\n";

    std::cout << "symmetries:";
    for (const Sigma& s : symmetry_group(t).members()) std::cout << " " << s.name();
    std::cout << "\noracle class: " << to_string(classify_by_oracle(t)) << "\n";

    const CanonicalDecomposition d = canonical_decomposition(t, 0);
    std::cout << "free member a = " << d.free_member << ", alpha(1) = " << d.alpha(1)
              << ", beta(1) = " << d.beta(1) << "\n";
    std::cout << "criteria class: " << to_string(classify_by_criteria(d).cls) << "\n";
    return 0;
}
