#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsym/errors.hpp"
#include "qsym/permutation.hpp"

namespace qsym {

/// An n-by-n Latin square over 0..n-1; entry (x,y) is the product x*y.
/// Every constructor validates the Latin property, so a CayleyTable value
/// is always a quasigroup.
class CayleyTable {
public:
    CayleyTable(int order, std::vector<int> cells) : n_(order), cells_(std::move(cells)) {
        if (n_ <= 0 || cells_.size() != static_cast<size_t>(n_) * n_)
            throw std::invalid_argument("cell count does not match order");
        for (int v : cells_)
            if (v < 0 || v >= n_) throw std::invalid_argument("entry out of range 0..n-1");
        validate_latin();
    }

    static CayleyTable from_rows(const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<int> cells;
        cells.reserve(static_cast<size_t>(n) * n);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw std::invalid_argument("table is not square");
            cells.insert(cells.end(), r.begin(), r.end());
        }
        return CayleyTable(n, std::move(cells));
    }

    int order() const { return n_; }
    int at(int x, int y) const { return cells_[static_cast<size_t>(x) * n_ + y]; }
    const std::vector<int>& cells() const { return cells_; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) out[x][y] = at(x, y);
        return out;
    }

    /// Left translation y -> x*y as a permutation.
    Permutation row_permutation(int x) const {
        std::vector<int> v(n_);
        for (int y = 0; y < n_; ++y) v[y] = at(x, y);
        return Permutation(std::move(v));
    }

    /// Right translation x -> x*y as a permutation.
    Permutation column_permutation(int y) const {
        std::vector<int> v(n_);
        for (int x = 0; x < n_; ++x) v[x] = at(x, y);
        return Permutation(std::move(v));
    }

    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

private:
    void validate_latin() const {
        std::vector<char> seen(n_);
        for (int x = 0; x < n_; ++x) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int y = 0; y < n_; ++y) {
                const int v = at(x, y);
                if (seen[v]) throw not_latin_square(not_latin_square::line_kind::row, x, v);
                seen[v] = 1;
            }
        }
        for (int y = 0; y < n_; ++y) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int x = 0; x < n_; ++x) {
                const int v = at(x, y);
                if (seen[v]) throw not_latin_square(not_latin_square::line_kind::column, y, v);
                seen[v] = 1;
            }
        }
    }

    int n_;
    std::vector<int> cells_;
};

/// Validates a square array as a quasigroup table.
/// Reports the first offending row, then the first offending column.
inline CayleyTable validate_quasigroup(const std::vector<std::vector<int>>& rows) {
    return CayleyTable::from_rows(rows);
}

} // namespace qsym
