#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// A partition of {0,...,n-1}. Class indices are contiguous and assigned in
// order of first occurrence, so class 0 always contains element 0.
struct EquivPartition {
    std::vector<int> class_of;
    int num_classes = 0;

    static EquivPartition from_labels(const std::vector<int>& raw) {
        EquivPartition p;
        p.class_of.assign(raw.size(), -1);
        std::vector<int> remap;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            int found = -1;
            for (std::size_t j = 0; j < i; ++j) {
                if (raw[j] == raw[i]) {
                    found = p.class_of[j];
                    break;
                }
            }
            if (found < 0) {
                found = p.num_classes++;
            }
            p.class_of[i] = found;
        }
        return p;
    }

    static EquivPartition identity(int n) {
        EquivPartition p;
        p.class_of.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.class_of[static_cast<std::size_t>(i)] = i;
        p.num_classes = n;
        return p;
    }

    int size() const { return static_cast<int>(class_of.size()); }
    bool is_identity() const { return num_classes == size(); }
    bool is_total() const { return num_classes == 1; }

    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> cs(static_cast<std::size_t>(num_classes));
        for (int i = 0; i < size(); ++i) cs[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])].push_back(i);
        return cs;
    }

    // True if every class of this partition is contained in a class of other.
    bool refines(const EquivPartition& other) const {
        for (int i = 0; i < size(); ++i) {
            for (int j = i + 1; j < size(); ++j) {
                if (class_of[static_cast<std::size_t>(i)] == class_of[static_cast<std::size_t>(j)] &&
                    other.class_of[static_cast<std::size_t>(i)] != other.class_of[static_cast<std::size_t>(j)]) {
                    return false;
                }
            }
        }
        return true;
    }

    bool operator==(const EquivPartition&) const = default;
};

inline std::string partition_string(const EquivPartition& p) {
    std::string out;
    for (const auto& cls : p.classes()) {
        if (!out.empty()) out += '|';
        out += '{';
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cls[i]);
        }
        out += '}';
    }
    return out;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }

    EquivPartition partition() {
        std::vector<int> labels(parent.size());
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) labels[static_cast<std::size_t>(i)] = find(i);
        return EquivPartition::from_labels(labels);
    }
};

}  // namespace detail

// Orbits of X under the group generated by all lambda_x and sigma_x, i.e. the
// permutation group underlying the semidirect-product action. Computed by
// union-find closure over generator images.
inline EquivPartition s_group_orbits(const Solution& s) {
    detail::UnionFind uf(s.n);
    for (int x = 0; x < s.n; ++x) {
        Permutation sx = sigma(s, x);
        for (int t = 0; t < s.n; ++t) {
            uf.unite(t, s.lam(x, t));
            uf.unite(t, sx(t));
        }
    }
    return uf.partition();
}

struct Decomposability {
    int n_max = 1;
    EquivPartition partition;
};

// The maximal n for which the solution is n-decomposable equals the number of
// orbits. Each orbit is cross-checked to be lambda- and rho-invariant.
inline Decomposability max_decomposability(const Solution& s) {
    EquivPartition orbits = s_group_orbits(s);
    for (const auto& cls : orbits.classes()) {
        std::unordered_set<int> member(cls.begin(), cls.end());
        for (int x = 0; x < s.n; ++x) {
            for (int y : cls) {
                if (!member.contains(s.lam(x, y)) || !member.contains(s.rh(x, y))) {
                    throw InternalError("orbit is not invariant under lambda/rho");
                }
            }
        }
    }
    return {orbits.num_classes, orbits};
}

struct DecomposableResult {
    bool decomposable = false;
    // A verified epimorphism onto the twist solution on {0,1}: class of each
    // element, with the orbit of 0 mapped to 0.
    std::optional<std::vector<int>> certificate;
};

inline Solution twist_solution(int n) {
    Solution s;
    s.n = n;
    s.name = "twist-" + std::to_string(n);
    s.lambda.assign(static_cast<std::size_t>(n), Permutation::identity(n).images());
    s.rho = s.lambda;
    return s;
}

inline DecomposableResult is_decomposable(const Solution& s) {
    Decomposability d = max_decomposability(s);
    if (d.n_max < 2) return {false, std::nullopt};
    std::vector<int> f(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) {
        f[static_cast<std::size_t>(i)] = d.partition.class_of[static_cast<std::size_t>(i)] == 0 ? 0 : 1;
    }
    if (!is_morphism(f, s, twist_solution(2))) {
        throw InternalError("orbit certificate is not a morphism onto the twist");
    }
    return {true, f};
}

// Order of the permutation group generated by the pairs (lambda_x, rho_x^{-1})
// acting on the disjoint union of two copies of X. Breadth-first closure on
// group elements; nullopt when the cap is exceeded.
inline std::optional<long long> g_group_order(const Solution& s, std::size_t cap = 10'000'000) {
    const int n = s.n;
    auto rho_inv = invert_rows(s.rho);
    std::vector<std::vector<int>> gens;
    for (int x = 0; x < n; ++x) {
        std::vector<int> g(2 * static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) {
            g[static_cast<std::size_t>(t)] = s.lam(x, t);
            g[static_cast<std::size_t>(n + t)] = n + rho_inv[static_cast<std::size_t>(x)][static_cast<std::size_t>(t)];
        }
        gens.push_back(std::move(g));
    }
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ULL;
            for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
            return h;
        }
    };
    std::vector<int> id(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < 2 * n; ++i) id[static_cast<std::size_t>(i)] = i;
    std::unordered_set<std::vector<int>, VecHash> seen{id};
    std::deque<std::vector<int>> queue{id};
    while (!queue.empty()) {
        std::vector<int> cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<int> prod(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) prod[i] = g[static_cast<std::size_t>(cur[i])];
            if (!seen.contains(prod)) {
                if (seen.size() >= cap) return std::nullopt;
                seen.insert(prod);
                queue.push_back(std::move(prod));
            }
        }
    }
    return static_cast<long long>(seen.size());
}

}  // namespace ybx
