#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/cayley_table.hpp"
#include "qsym/errors.hpp"

namespace qsym {

/// Text format: first a line with n, then n lines of n whitespace-separated
/// integers; lines starting with '#' are comments.  Any consistent set of n
/// distinct integer labels is accepted and normalized to 0..n-1 in
/// ascending label order.
inline CayleyTable read_table(std::istream& in) {
    std::vector<long long> numbers;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long v;
        while (ls >> v) numbers.push_back(v);
        if (!ls.eof()) {
            std::string tail;
            ls.clear();
            ls >> tail;
            throw parse_error("not an integer: '" + tail + "'");
        }
    }
    if (numbers.empty()) throw parse_error("empty table file");
    const long long n = numbers.front();
    if (n < 1 || n > 4096) throw parse_error("bad table order " + std::to_string(n));
    if (static_cast<long long>(numbers.size()) != 1 + n * n)
        throw parse_error("expected " + std::to_string(n * n) + " entries, found " +
                          std::to_string(numbers.size() - 1));

    // normalize labels
    std::map<long long, int> index;
    for (size_t i = 1; i < numbers.size(); ++i) index.emplace(numbers[i], 0);
    if (static_cast<long long>(index.size()) != n)
        throw parse_error("expected " + std::to_string(n) + " distinct labels, found " +
                          std::to_string(index.size()));
    int next = 0;
    for (auto& [label, idx] : index) idx = next++;

    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (size_t i = 1; i < numbers.size(); ++i) cells[i - 1] = index.at(numbers[i]);
    return CayleyTable(static_cast<int>(n), std::move(cells));
}

inline CayleyTable read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_table(in);
}

inline void write_table(std::ostream& out, const CayleyTable& t) {
    out << t.order() << "\n";
    for (int x = 0; x < t.order(); ++x) {
        for (int y = 0; y < t.order(); ++y) out << (y ? " " : "") << t.at(x, y);
        out << "\n";
    }
}

inline std::string to_text(const CayleyTable& t) {
    std::ostringstream os;
    write_table(os, t);
    return os.str();
}

} // namespace qsym
