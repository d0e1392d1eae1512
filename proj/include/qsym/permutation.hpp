#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

/// A bijection of {0..n-1}, stored as its image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
                throw std::invalid_argument("image list is not a bijection of 0..n-1");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// compose(p, q): apply q first, then p.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> v(p.size());
    for (int i = 0; i < p.size(); ++i) v[i] = p(q(i));
    return Permutation(std::move(v));
}

} // namespace qsym
