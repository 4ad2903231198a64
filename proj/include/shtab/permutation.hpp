#pragma once

// Permutations of [n] acting on letters and words by value relabeling.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "letter.hpp"

namespace shtab {

struct Permutation {
    std::vector<int> images; // 1-based: images[k-1] = tau(k)

    Permutation() = default;
    explicit Permutation(std::vector<int> img) : images(std::move(img)) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > (int)images.size() || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection on [n]");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Permutation(img);
    }

    // theta_i = transposition (i, i+1)
    static Permutation theta(int i, int n) {
        auto p = identity(n);
        p.images[i - 1] = i + 1;
        p.images[i] = i;
        return p;
    }

    // theta_{i,j}: reverses the interval [i, j]
    static Permutation theta_range(int i, int j, int n) {
        auto p = identity(n);
        for (int x = i; x <= j; ++x) p.images[x - 1] = i + j - x;
        return p;
    }

    // zeta_i = theta_i theta_{i-1} ... theta_1 = cycle (1, i+1, i, ..., 2)
    static Permutation zeta(int i, int n) {
        auto p = identity(n);
        for (int k = 1; k <= i; ++k) p = compose(theta(k, n), p);
        return p;
    }

    int n() const { return (int)images.size(); }
    int operator()(int k) const {
        if (k < 1 || k > n()) throw std::out_of_range("Permutation: argument out of range");
        return images[k - 1];
    }
    Letter operator()(const Letter& x) const { return Letter((*this)(x.value), x.primed); }

    // (compose(a, b))(x) = a(b(x))
    static Permutation compose(const Permutation& a, const Permutation& b) {
        if (a.n() != b.n()) throw std::invalid_argument("Permutation: size mismatch");
        std::vector<int> img(a.n());
        for (int k = 1; k <= a.n(); ++k) img[k - 1] = a(b(k));
        return Permutation(img);
    }

    Permutation inverse() const {
        std::vector<int> img(n());
        for (int k = 1; k <= n(); ++k) img[images[k - 1] - 1] = k;
        return Permutation(img);
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
};

} // namespace shtab
