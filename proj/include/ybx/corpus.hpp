#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybx/decomposition.hpp"
#include "ybx/errors.hpp"
#include "ybx/solution.hpp"

namespace ybx {

inline constexpr int kEnumerationCap = 4;

// Derived-type solution r(x,y) = (y, sigma_y(x)) from right-translation maps.
inline Solution solution_from_translations(std::vector<std::vector<int>> sigmas, std::string name = {}) {
    Solution s;
    s.n = static_cast<int>(sigmas.size());
    s.name = std::move(name);
    s.lambda.assign(static_cast<std::size_t>(s.n), Permutation::identity(s.n).images());
    s.rho = std::move(sigmas);
    return s;
}

// The trivial quandle extended by one element acting on {0,1} by the flip:
// sigma_0 = sigma_1 = id, sigma_2 = (0 1). Square-free, decomposable into
// {0,1} | {2}, and not injective: 0 and 1 merge in the structure group.
inline Solution one_flip_quandle_3() {
    return solution_from_translations({{0, 1, 2}, {0, 1, 2}, {1, 0, 2}}, "one-flip-quandle-3");
}

// Cyclic rack on n elements: x <| y = x + 1. Its derived solution is not a
// biquandle, and the whole set collapses in the structure group.
inline Solution cycle_rack_solution(int n) {
    std::vector<std::vector<int>> sigmas(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) sigmas[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = (x + 1) % n;
    }
    return solution_from_translations(std::move(sigmas), "cycle-rack-" + std::to_string(n));
}

// Dihedral quandle on Z_3 (x <| y = 2y - x), equivalently the conjugation
// quandle on the transpositions of S_3. Injective, indecomposable, simple,
// with a non-nilpotent derived monoid.
inline Solution dihedral_quandle_3() {
    return solution_from_translations({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}, "dihedral-quandle-3");
}

// Relabeling of one_flip_quandle_3 by the transposition (0 2); isomorphic but
// not table-equal.
inline Solution one_flip_quandle_3_relabeled() {
    return solution_from_translations({{0, 2, 1}, {0, 1, 2}, {0, 1, 2}}, "one-flip-quandle-3-relabeled");
}

// The flip solution r(x,y) = (y+1, x+1) on Z_2.
inline Solution flip_2() {
    Solution s;
    s.n = 2;
    s.name = "flip-2";
    s.lambda = {{1, 0}, {1, 0}};
    s.rho = {{1, 0}, {1, 0}};
    return s;
}

// Involutive solution on six elements with Dehornoy class 3; lambda rows fixed,
// rho derived by involutivity. Its diagonal map is (0 2 1)(3 5 4).
inline Solution involutive_six() {
    Solution s;
    s.n = 6;
    s.name = "involutive-6";
    s.lambda = {
        {1, 2, 0, 3, 4, 5},  // (0 1 2)
        {1, 2, 0, 4, 5, 3},  // (0 1 2)(3 4 5)
        {1, 2, 0, 5, 3, 4},  // (0 1 2)(3 5 4)
        {0, 1, 2, 4, 5, 3},  // (3 4 5)
        {0, 1, 2, 4, 5, 3},
        {0, 1, 2, 4, 5, 3},
    };
    auto lam_inv = invert_rows(s.lambda);
    s.rho.assign(6, std::vector<int>(6));
    for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 6; ++x) {
            int w = s.lam(x, y);
            s.rho[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
                lam_inv[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)];
        }
    }
    return s;
}

struct Fixture {
    std::string name;
    Solution solution;
};

inline const std::vector<Fixture>& named_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> v;
        auto add = [&](const Solution& s) { v.push_back({s.name, s}); };
        add(twist_solution(2));
        add(twist_solution(3));
        add(flip_2());
        add(one_flip_quandle_3());
        add(one_flip_quandle_3_relabeled());
        add(cycle_rack_solution(3));
        add(dihedral_quandle_3());
        add(involutive_six());
        return v;
    }();
    return fixtures;
}

inline std::optional<Solution> fixture_by_name(const std::string& name) {
    for (const auto& f : named_fixtures()) {
        if (f.name == name) return f.solution;
    }
    return std::nullopt;
}

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Partial evaluation of both sides of the braid relation at (x,y,z); rows that
// are not yet assigned make the triple undecided. Returns false only on a
// definite violation.
struct PartialTables {
    int n = 0;
    const std::vector<int>* lambda_rows[8] = {};
    const std::vector<int>* rho_rows[8] = {};

    std::optional<std::pair<int, int>> r(int x, int y) const {
        const auto* lx = lambda_rows[x];
        const auto* ry = rho_rows[y];
        if (!lx || !ry) return std::nullopt;
        return std::pair<int, int>{(*lx)[static_cast<std::size_t>(y)], (*ry)[static_cast<std::size_t>(x)]};
    }

    // 0 = violated, 1 = satisfied, 2 = undecided
    int braid_at(int x, int y, int z) const {
        auto lhs = eval(x, y, z, true);
        auto rhs = eval(x, y, z, false);
        if (!lhs || !rhs) return 2;
        return *lhs == *rhs ? 1 : 0;
    }

private:
    std::optional<std::array<int, 3>> eval(int x, int y, int z, bool first12) const {
        std::array<int, 3> v{x, y, z};
        for (int step = 0; step < 3; ++step) {
            bool on12 = first12 ? (step % 2 == 0) : (step % 2 == 1);
            int a = on12 ? v[0] : v[1];
            int b = on12 ? v[1] : v[2];
            auto im = r(a, b);
            if (!im) return std::nullopt;
            if (on12) {
                v[0] = im->first;
                v[1] = im->second;
            } else {
                v[1] = im->first;
                v[2] = im->second;
            }
        }
        return v;
    }
};

}  // namespace detail

// Depth-first enumeration of all valid solutions on {0,...,n-1}: rows
// lambda_0, rho_0, lambda_1, rho_1, ... are assigned in order, pruning on
// injectivity of r and on every braid triple that becomes decided.
// Deterministic lexicographic output order. n is capped at kEnumerationCap;
// n = 4 takes a while and sits behind the CLI --slow flag.
inline void enumerate_solutions(int n, const std::function<void(const Solution&)>& sink) {
    if (n < 1) throw PreconditionError("enumerate_solutions: n must be >= 1");
    if (n > kEnumerationCap) {
        throw PreconditionError("enumerate_solutions: n > " + std::to_string(kEnumerationCap) + " is not supported");
    }
    const auto perms = detail::all_permutations(n);
    detail::PartialTables pt;
    pt.n = n;
    // slot 2i assigns lambda_i, slot 2i+1 assigns rho_i
    std::vector<char> pair_used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);

    auto check_new_pairs = [&](int slot) -> bool {
        // r(x,y) becomes determined once lambda_x and rho_y are both set; mark
        // the image and fail on a collision.
        int idx = slot / 2;
        bool is_lambda = slot % 2 == 0;
        for (int other = 0; other < n; ++other) {
            int x = is_lambda ? idx : other;
            int y = is_lambda ? other : idx;
            if (!pt.lambda_rows[x] || !pt.rho_rows[y]) continue;
            auto im = pt.r(x, y);
            std::size_t code = static_cast<std::size_t>(im->first) * static_cast<std::size_t>(n) +
                               static_cast<std::size_t>(im->second);
            if (pair_used[code]) {
                // roll back the marks made in this call
                for (int prev = 0; prev < other; ++prev) {
                    int px = is_lambda ? idx : prev;
                    int py = is_lambda ? prev : idx;
                    if (!pt.lambda_rows[px] || !pt.rho_rows[py]) continue;
                    auto pim = pt.r(px, py);
                    pair_used[static_cast<std::size_t>(pim->first) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(pim->second)] = 0;
                }
                return false;
            }
            pair_used[code] = 1;
        }
        return true;
    };
    auto unmark_pairs = [&](int slot) {
        int idx = slot / 2;
        bool is_lambda = slot % 2 == 0;
        for (int other = 0; other < n; ++other) {
            int x = is_lambda ? idx : other;
            int y = is_lambda ? other : idx;
            if (!pt.lambda_rows[x] || !pt.rho_rows[y]) continue;
            auto im = pt.r(x, y);
            pair_used[static_cast<std::size_t>(im->first) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(im->second)] = 0;
        }
    };

    std::function<void(int)> dfs = [&](int slot) {
        if (slot == 2 * n) {
            Solution s;
            s.n = n;
            s.lambda.reserve(static_cast<std::size_t>(n));
            s.rho.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                s.lambda.push_back(*pt.lambda_rows[i]);
                s.rho.push_back(*pt.rho_rows[i]);
            }
            sink(s);
            return;
        }
        int idx = slot / 2;
        bool is_lambda = slot % 2 == 0;
        for (const auto& perm : perms) {
            if (is_lambda) {
                pt.lambda_rows[idx] = &perm;
            } else {
                pt.rho_rows[idx] = &perm;
            }
            bool ok = check_new_pairs(slot);
            if (ok) {
                for (int x = 0; x < n && ok; ++x) {
                    for (int y = 0; y < n && ok; ++y) {
                        for (int z = 0; z < n && ok; ++z) {
                            ok = pt.braid_at(x, y, z) != 0;
                        }
                    }
                }
                if (ok) dfs(slot + 1);
                unmark_pairs(slot);
            }
            if (is_lambda) {
                pt.lambda_rows[idx] = nullptr;
            } else {
                pt.rho_rows[idx] = nullptr;
            }
        }
    };
    dfs(0);
}

inline std::vector<Solution> enumerate_solutions(int n) {
    std::vector<Solution> out;
    enumerate_solutions(n, [&](const Solution& s) { out.push_back(s); });
    return out;
}

// Table equality up to a relabeling bijection; factorial search, desk scale.
inline bool iso_equivalent(const Solution& s, const Solution& t) {
    if (s.n != t.n) return false;
    if (s.n > 6) throw PreconditionError("iso_equivalent: factorial search supports n <= 6");
    for (const auto& g : detail::all_permutations(s.n)) {
        bool match = true;
        for (int x = 0; x < s.n && match; ++x) {
            for (int y = 0; y < s.n && match; ++y) {
                match = t.lam(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)]) ==
                            g[static_cast<std::size_t>(s.lam(x, y))] &&
                        t.rh(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)]) ==
                            g[static_cast<std::size_t>(s.rh(x, y))];
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace ybx
