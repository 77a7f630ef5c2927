#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybx/decomposition.hpp"
#include "ybx/errors.hpp"
#include "ybx/monoid.hpp"
#include "ybx/solution.hpp"

namespace ybx {

enum class QuotientStatus { Exact, Unknown };

struct QuotientResult {
    EquivPartition kernel;  // partition of the input's underlying set
    Solution quotient;
    QuotientStatus status = QuotientStatus::Exact;
    int iterations = 1;  // number of quotient passes taken (biquandle quotient only)
};

// True iff the partition is compatible with r, i.e. lambda_x(y) and rho_y(x)
// depend only on the classes of x and y.
inline bool is_congruence(const Solution& s, const EquivPartition& p) {
    for (int x = 0; x < s.n; ++x) {
        for (int x2 = x + 1; x2 < s.n; ++x2) {
            if (p.class_of[static_cast<std::size_t>(x)] != p.class_of[static_cast<std::size_t>(x2)]) continue;
            for (int y = 0; y < s.n; ++y) {
                if (p.class_of[static_cast<std::size_t>(s.lam(x, y))] != p.class_of[static_cast<std::size_t>(s.lam(x2, y))] ||
                    p.class_of[static_cast<std::size_t>(s.rh(y, x))] != p.class_of[static_cast<std::size_t>(s.rh(y, x2))] ||
                    p.class_of[static_cast<std::size_t>(s.lam(y, x))] != p.class_of[static_cast<std::size_t>(s.lam(y, x2))] ||
                    p.class_of[static_cast<std::size_t>(s.rh(x, y))] != p.class_of[static_cast<std::size_t>(s.rh(x2, y))]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Quotient tables on the classes of p; requires is_congruence(s, p).
inline Solution induce_quotient(const Solution& s, const EquivPartition& p) {
    const int m = p.num_classes;
    std::vector<int> rep(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < s.n; ++i) {
        int c = p.class_of[static_cast<std::size_t>(i)];
        if (rep[static_cast<std::size_t>(c)] < 0) rep[static_cast<std::size_t>(c)] = i;
    }
    Solution q;
    q.n = m;
    q.lambda.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    q.rho.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int x = rep[static_cast<std::size_t>(a)];
            int y = rep[static_cast<std::size_t>(b)];
            q.lambda[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                p.class_of[static_cast<std::size_t>(s.lam(x, y))];
            q.rho[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                p.class_of[static_cast<std::size_t>(s.rh(x, y))];
        }
    }
    return q;
}

// Smallest congruence containing the given pairs: equivalence closure followed
// by compatibility closure to a fixpoint.
inline EquivPartition congruence_closure(const Solution& s, const std::vector<std::pair<int, int>>& pairs) {
    detail::UnionFind uf(s.n);
    for (auto [a, b] : pairs) uf.unite(a, b);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < s.n; ++x) {
            for (int x2 = x + 1; x2 < s.n; ++x2) {
                if (uf.find(x) != uf.find(x2)) continue;
                for (int y = 0; y < s.n; ++y) {
                    changed |= uf.unite(s.lam(x, y), s.lam(x2, y));
                    changed |= uf.unite(s.rh(y, x), s.rh(y, x2));
                    changed |= uf.unite(s.lam(y, x), s.lam(y, x2));
                    changed |= uf.unite(s.rh(x, y), s.rh(x2, y));
                }
            }
        }
    }
    return uf.partition();
}

namespace detail {

inline Solution validated_quotient(const Solution& s, const EquivPartition& p, const char* what) {
    if (!is_congruence(s, p)) {
        throw InternalError(std::string(what) + ": induced table is ill-defined");
    }
    Solution q = induce_quotient(s, p);
    auto rep = validate(q);
    if (!rep.ok()) {
        throw InternalError(std::string(what) + ": quotient fails validation: " + rep.items.front().witness);
    }
    return q;
}

inline EquivPartition compose_partitions(const EquivPartition& first, const EquivPartition& second) {
    std::vector<int> labels(first.class_of.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = second.class_of[static_cast<std::size_t>(first.class_of[i])];
    }
    return EquivPartition::from_labels(labels);
}

}  // namespace detail

// The associated biquandle: quotient by the smallest equivalence with
// x ~ lambda_x(y) whenever rho_y(x) = y, iterated until the result is a
// biquandle. One pass is expected to suffice; the iteration count records the
// evidence.
inline QuotientResult bq_quotient(const Solution& s) {
    QuotientResult res;
    res.kernel = EquivPartition::identity(s.n);
    res.quotient = s;
    res.iterations = 0;
    while (true) {
        const Solution& cur = res.quotient;
        if (classify(cur).biquandle && res.iterations > 0) break;
        detail::UnionFind uf(cur.n);
        bool any = false;
        for (int x = 0; x < cur.n; ++x) {
            for (int y = 0; y < cur.n; ++y) {
                if (cur.rh(y, x) == y) any |= uf.unite(x, cur.lam(x, y));
            }
        }
        EquivPartition step = uf.partition();
        Solution next = detail::validated_quotient(cur, step, "biquandle quotient");
        res.kernel = res.iterations == 0 ? step : detail::compose_partitions(res.kernel, step);
        res.quotient = std::move(next);
        ++res.iterations;
        if (!any) break;  // nothing identified; fixpoint reached
    }
    if (!classify(res.quotient).biquandle) {
        throw InternalError("biquandle quotient: fixpoint is not a biquandle");
    }
    return res;
}

// Retraction: identify x and y iff lambda_x = lambda_y and sigma_x = sigma_y.
inline QuotientResult retract(const Solution& s) {
    std::vector<Permutation> sig(static_cast<std::size_t>(s.n));
    for (int x = 0; x < s.n; ++x) sig[static_cast<std::size_t>(x)] = sigma(s, x);
    detail::UnionFind uf(s.n);
    for (int x = 0; x < s.n; ++x) {
        for (int y = x + 1; y < s.n; ++y) {
            if (s.lambda[static_cast<std::size_t>(x)] == s.lambda[static_cast<std::size_t>(y)] &&
                sig[static_cast<std::size_t>(x)] == sig[static_cast<std::size_t>(y)]) {
                uf.unite(x, y);
            }
        }
    }
    QuotientResult res;
    res.kernel = uf.partition();
    res.quotient = detail::validated_quotient(s, res.kernel, "retract");
    return res;
}

struct MultipermutationLevel {
    bool finite = false;
    int level = 0;  // meaningful only when finite
};

// Number of strictly shrinking retraction steps until a singleton, or
// infinite if the iteration stalls on a larger fixpoint.
inline MultipermutationLevel multipermutation_level(const Solution& s) {
    Solution cur = s;
    int steps = 0;
    while (cur.n > 1) {
        QuotientResult r = retract(cur);
        if (r.quotient.n == cur.n) return {false, 0};
        cur = r.quotient;
        ++steps;
    }
    return {true, steps};
}

// Injectivization: quotient by the kernel of the canonical map into the
// structure group, decided pairwise with equal_in_G. Exact when every pair
// resolved Equal or Distinct; otherwise only the confirmed identifications
// are applied and the result is a lower bound on the identification.
inline QuotientResult injectivization(const Solution& s, int l_max = kDefaultLMax,
                                      std::size_t node_cap = kDefaultNodeCap) {
    long long d = dehornoy_class(s);
    bool exact = true;
    std::vector<std::pair<int, int>> equal_pairs;
    for (int x = 0; x < s.n; ++x) {
        for (int y = x + 1; y < s.n; ++y) {
            GVerdict v = detail::equal_in_G_padded(s, Word{x}, Word{y}, d, l_max, node_cap);
            if (v == GVerdict::Equal) {
                equal_pairs.emplace_back(x, y);
            } else if (v == GVerdict::Unknown) {
                exact = false;
            }
        }
    }
    detail::UnionFind uf(s.n);
    for (auto [a, b] : equal_pairs) uf.unite(a, b);
    QuotientResult res;
    res.kernel = uf.partition();
    res.status = exact ? QuotientStatus::Exact : QuotientStatus::Unknown;
    if (is_congruence(s, res.kernel)) {
        res.quotient = detail::validated_quotient(s, res.kernel, "injectivization");
    } else if (!exact) {
        // A partial kernel need not be compatible yet; the smallest congruence
        // containing it is still a lower bound on the true identification.
        res.kernel = congruence_closure(s, equal_pairs);
        res.quotient = detail::validated_quotient(s, res.kernel, "injectivization");
    } else {
        throw InternalError("injectivization: exact kernel is not a congruence");
    }
    return res;
}

enum class Tristate { True, False, Unknown };

inline Tristate is_injective(const Solution& s, int l_max = kDefaultLMax, std::size_t node_cap = kDefaultNodeCap) {
    long long d = dehornoy_class(s);
    bool exact = true;
    for (int x = 0; x < s.n; ++x) {
        for (int y = x + 1; y < s.n; ++y) {
            GVerdict v = detail::equal_in_G_padded(s, Word{x}, Word{y}, d, l_max, node_cap);
            if (v == GVerdict::Equal) return Tristate::False;
            if (v == GVerdict::Unknown) exact = false;
        }
    }
    return exact ? Tristate::True : Tristate::Unknown;
}

}  // namespace ybx
