#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ybx/errors.hpp"

namespace ybx {

// A permutation of {0,...,n-1} stored as an image array: images()[x] is where
// x maps. Composition is (a * b)(x) = a(b(x)), the right factor acting first.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        if (!is_bijection(img_)) {
            throw StructuralError("permutation: image array is not a bijection");
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    static bool is_bijection(const std::vector<int>& img) {
        const int n = static_cast<int>(img.size());
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : img) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        return true;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i) {
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        }
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
        Permutation p;
        p.img_ = std::move(inv);
        return p;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        std::vector<int> c(a.img_.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
        }
        Permutation p;
        p.img_ = std::move(c);
        return p;
    }

    Permutation pow(long long k) const {
        Permutation base = k >= 0 ? *this : inverse();
        if (k < 0) k = -k;
        Permutation acc = identity(size());
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // Cycles in increasing order of their minimal element; fixed points
    // included only on request.
    std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
        std::vector<std::vector<int>> out;
        std::vector<char> done(img_.size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            std::vector<int> cyc;
            int j = i;
            do {
                done[static_cast<std::size_t>(j)] = 1;
                cyc.push_back(j);
                j = img_[static_cast<std::size_t>(j)];
            } while (j != i);
            if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
        }
        return out;
    }

    // Cycle lengths including fixed points, descending.
    std::vector<int> cycle_type() const {
        std::vector<int> lens;
        for (const auto& c : cycles(true)) lens.push_back(static_cast<int>(c.size()));
        std::sort(lens.rbegin(), lens.rend());
        return lens;
    }

    long long order() const {
        long long ord = 1;
        for (const auto& c : cycles(true)) {
            ord = std::lcm(ord, static_cast<long long>(c.size()));
        }
        return ord;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

inline std::string cycle_string(const Permutation& p) {
    auto cs = p.cycles(false);
    if (cs.empty()) return "id";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

}  // namespace ybx
