// Command-line front end: validation, parastrophes, classification,
// decomposition, enumeration, censuses and the self-verification sweeps.
//
// Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr),
// 2 usage error.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsym/json_io.hpp"
#include "qsym/qsym.hpp"

namespace {

using namespace qsym;

void print_criteria(const CriteriaReport& report) {
    std::cout << "class: " << to_string(report.cls) << "\n";
    std::cout << "checks:\n";
    for (const auto& [name, value] : report.checks)
        std::cout << "  " << name << ": " << (value ? "true" : "false") << "\n";
    if (report.zero_independent)
        std::cout << "zero_independent: " << (*report.zero_independent ? "true" : "false") << "\n";
}

void print_census(const CensusReport& report) {
    std::cout << "order " << report.p;
    if (report.k) std::cout << "  (k = " << *report.k << ", k^2 = p-3)";
    std::cout << "\ncounts:";
    for (const auto& [cls, count] : report.counts()) std::cout << " " << short_label(cls) << "=" << count;
    std::cout << "  total=" << report.total << "\n";
    for (const auto& [cls, specs] : report.representatives) {
        std::cout << to_string(cls) << ":";
        for (const auto& s : specs) std::cout << " (" << s.alpha << "," << s.beta << "," << s.d << ")";
        std::cout << "\n";
    }
}

void print_enumeration(const ModulusEnumeration& e) {
    std::cout << "modulus " << e.m << (e.prime ? " (prime)" : "")
              << (e.validated ? "" : "  [canonical d not validated at this size]") << "\n";
    for (const auto& entry : e.pairs) {
        std::cout << "alpha=" << entry.alpha << " beta=" << entry.beta << " mu=" << entry.mu
                  << " gcd=" << entry.g << "  d:";
        for (int d : entry.canonical_d) std::cout << " " << d;
        if (e.validated && !entry.matches_divisor_reading) {
            std::cout << "  (divisor reading:";
            for (int d : entry.divisor_reading_d) std::cout << " " << d;
            std::cout << ")";
        }
        std::cout << "\n";
    }
    if (e.validated) std::cout << "classes: " << e.total_classes << "\n";
}

int run_verify(int max_order, int samples, std::uint32_t seed) {
    bool all_ok = true;

    int swept = 0;
    bool sweep_ok = true;
    for (int m = 2; m <= std::min(max_order, 9); ++m) {
        for (int a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            for (int b = 1; b < m; ++b) {
                if (std::gcd(b, m) != 1) continue;
                for (int d = 0; d < m; ++d) {
                    const CrossCheckReport r = cross_check(linear_isotope_table({m, a, b, d}));
                    ++swept;
                    if (!r.agree) {
                        sweep_ok = false;
                        std::cerr << "disagreement at (" << a << "," << b << "," << d
                                  << ") mod " << m << "\n";
                    }
                }
            }
        }
    }
    std::cout << "linear isotopes of Z_m, m=2.." << std::min(max_order, 9) << ": " << swept
              << " tables, " << (sweep_ok ? "all agree" : "DISAGREEMENT") << "\n";
    all_ok = all_ok && sweep_ok;

    std::mt19937 rng(seed);
    struct Base {
        const char* name;
        GroupStructure group;
        bool expect_dichotomy;
    };
    const std::vector<Base> bases = {
        {"Z_6", cyclic_group(6), false},
        {"S_3", symmetric_group3(), true},
        {"Z_4", cyclic_group(4), false},
        {"Z_2xZ_2", direct_product(cyclic_group(2), cyclic_group(2)), false},
    };
    for (const Base& base : bases) {
        if (base.group.order() > max_order) continue;
        bool ok = true;
        for (int i = 0; i < samples; ++i) {
            const CayleyTable t = random_group_isotope(rng, base.group);
            const CrossCheckReport r = cross_check(t);
            if (!r.agree || !r.criteria) ok = false;
            if (base.expect_dichotomy && r.criteria &&
                *r.criteria != SymmetryClass::strictly_semi_symmetric &&
                *r.criteria != SymmetryClass::asymmetric)
                ok = false;
        }
        std::cout << base.name << " isotopes: " << samples << " samples, "
                  << (ok ? "all agree" : "DISAGREEMENT")
                  << (base.expect_dichotomy ? " (semi-symmetric or asymmetric only)" : "") << "\n";
        all_ok = all_ok && ok;
    }

    std::cout << (all_ok ? "verify: OK" : "verify: FAILED") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasigroup symmetry classification and linear-isotope censuses"};
    app.require_subcommand(1);

    std::string file, sigma_name = "id", format = "table";
    int zero = 0, modulus = 0, prime = 0, order = 3;
    int max_order = 9, samples = 1000;
    std::uint32_t seed = 12345;

    auto* cmd_check = app.add_subcommand("check", "validate a table file");
    cmd_check->add_option("file", file)->required();

    auto* cmd_para = app.add_subcommand("parastrophe", "write a parastrophe of a table");
    cmd_para->add_option("file", file)->required();
    cmd_para->add_option("--sigma", sigma_name, "one of id, s, l, r, sl, sr")
        ->required()
        ->check(CLI::IsMember({"id", "s", "l", "r", "sl", "sr"}));

    auto* cmd_sym = app.add_subcommand("sym", "symmetry group and oracle class");
    cmd_sym->add_option("file", file)->required();

    auto* cmd_classify = app.add_subcommand("classify", "classify by decomposition criteria");
    cmd_classify->add_option("file", file)->required();
    cmd_classify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_decompose = app.add_subcommand("decompose", "canonical decomposition at a zero");
    cmd_decompose->add_option("file", file)->required();
    cmd_decompose->add_option("--zero", zero);
    cmd_decompose->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_enum = app.add_subcommand("enumerate", "canonical linear isotopes of Z_m");
    cmd_enum->add_option("--modulus", modulus)->required()->check(CLI::Range(2, 64));
    cmd_enum->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* cmd_census = app.add_subcommand("census", "prime-order census (p > 3)");
    cmd_census->add_option("--prime", prime)->required();
    cmd_census->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* cmd_small = app.add_subcommand("small-census", "exhaustive order 2 or 3 census");
    cmd_small->add_option("--order", order)->required()->check(CLI::IsMember({2, 3}));
    cmd_small->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* cmd_verify = app.add_subcommand("verify", "oracle/criteria cross-check sweeps");
    cmd_verify->add_option("--max-order", max_order)->check(CLI::Range(2, 9));
    cmd_verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_check)) {
            const CayleyTable t = read_table_file(file);
            std::cout << "ok: quasigroup of order " << t.order() << "\n";
        } else if (app.got_subcommand(cmd_para)) {
            const CayleyTable t = read_table_file(file);
            write_table(std::cout, parastrophe(t, Sigma::from_name(sigma_name)));
        } else if (app.got_subcommand(cmd_sym)) {
            const CayleyTable t = read_table_file(file);
            const SymmetryGroup g = symmetry_group(t);
            std::cout << "symmetry group: {";
            bool first = true;
            for (const Sigma& s : g.members()) {
                std::cout << (first ? "" : ", ") << s.name();
                first = false;
            }
            std::cout << "}\nclass: " << to_string(class_of(g)) << "\n";
        } else if (app.got_subcommand(cmd_classify)) {
            const CriteriaReport report = classify_table(read_table_file(file));
            if (format == "json") std::cout << to_json(report).dump(2) << "\n";
            else print_criteria(report);
        } else if (app.got_subcommand(cmd_decompose)) {
            const CanonicalDecomposition d = canonical_decomposition(read_table_file(file), zero);
            if (format == "json") {
                std::cout << to_json(d).dump(2) << "\n";
            } else {
                std::cout << "zero: " << d.zero << "\nfree member a: " << d.free_member << "\nalpha:";
                for (int v : d.alpha.images()) std::cout << " " << v;
                std::cout << "\nbeta:";
                for (int v : d.beta.images()) std::cout << " " << v;
                std::cout << "\ngroup table:\n";
                write_table(std::cout, d.group.table);
            }
        } else if (app.got_subcommand(cmd_enum)) {
            const ModulusEnumeration e = enumerate_modulus(modulus);
            if (format == "json") std::cout << to_json(e).dump(2) << "\n";
            else if (format == "csv") std::cout << enumeration_to_csv(e);
            else print_enumeration(e);
        } else if (app.got_subcommand(cmd_census)) {
            const CensusReport report = census(prime);
            if (format == "json") std::cout << to_json(report).dump(2) << "\n";
            else if (format == "csv") std::cout << census_to_csv(report);
            else print_census(report);
        } else if (app.got_subcommand(cmd_small)) {
            const CensusReport report = small_order_census(order);
            if (format == "json") std::cout << to_json(report).dump(2) << "\n";
            else if (format == "csv") std::cout << census_to_csv(report);
            else print_census(report);
        } else if (app.got_subcommand(cmd_verify)) {
            return run_verify(max_order, samples, seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
