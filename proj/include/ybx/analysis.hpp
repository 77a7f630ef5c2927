#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ybx/decomposition.hpp"
#include "ybx/errors.hpp"
#include "ybx/quotients.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// The derived monoid is nilpotent iff the derived rack has finite
// multipermutation level, i.e. iterated rack retraction (identify x,y with
// sigma_x = sigma_y) reaches a singleton.
inline bool is_A_nilpotent(const Solution& s) {
    return multipermutation_level(derived_solution(s)).finite;
}

// Cycle lengths of the diagonal map, descending; sums to n.
inline std::vector<int> q_partition(const Solution& s) {
    DiagonalMap q = diagonal_map(s);
    if (!q.bijective) throw PreconditionError("q_partition: diagonal map is not bijective");
    return q.permutation().cycle_type();
}

// For n = p*s with p prime and p not dividing s: an indecomposable solution
// whose derived solution has finite multipermutation level cannot have a
// q-partition term t with (p-1)*s < t < p*s and gcd(t,p) = 1. Returns the
// first offending term, if any.
inline std::optional<int> forbidden_q_partition_term(int p, int s, const std::vector<int>& q_parts) {
    for (int t : q_parts) {
        if (static_cast<long long>(p - 1) * s < t && t < static_cast<long long>(p) * s && std::gcd(t, p) == 1) {
            return t;
        }
    }
    return std::nullopt;
}

struct CriterionRecord {
    std::string name;
    std::string inputs;
    bool fired = false;
    std::string note;
};

enum class Conclusion { Decomposable, Indecomposable, Simple, NotSimple, NoVerdict };

struct Verdict {
    Conclusion conclusion = Conclusion::NoVerdict;
    std::vector<CriterionRecord> reasons;
    std::optional<EquivPartition> orbit_partition;
    std::optional<std::vector<int>> certificate;  // epimorphism onto twist-2, when decomposable
};

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace detail

// Ground truth plus the numerical criteria, each recorded with its inputs.
// (a) exact orbit count; (b) square-free with nilpotent derived monoid forces
// decomposability; (c) nilpotent derived monoid with gcd(|X|, |q|) = 1 forces
// decomposability; (d) the q-partition bound, run as a consistency check
// against (a) on indecomposable multipermutation-derived solutions.
inline Verdict indecomposability_report(const Solution& s) {
    Verdict v;
    Decomposability d = max_decomposability(s);
    v.orbit_partition = d.partition;
    bool decomposable = d.n_max >= 2;
    v.conclusion = decomposable ? Conclusion::Decomposable : Conclusion::Indecomposable;
    v.reasons.push_back({"orbit-count", "n_max=" + std::to_string(d.n_max), true,
                         decomposable ? "decomposable" : "indecomposable"});
    if (decomposable) {
        v.certificate = is_decomposable(s).certificate;
    }

    ClassifyFlags flags = classify(s);
    bool nilpotent = is_A_nilpotent(s);

    {
        CriterionRecord r;
        r.name = "square-free-nilpotent";
        r.inputs = std::string("square_free=") + (flags.square_free ? "yes" : "no") +
                   ", A_nilpotent=" + (nilpotent ? "yes" : "no") + ", n=" + std::to_string(s.n);
        r.fired = s.n >= 2 && flags.square_free && nilpotent;
        if (r.fired) {
            r.note = "decomposable";
            if (!decomposable) throw InternalError("square-free nilpotent criterion contradicts the orbit count");
        } else {
            r.note = s.n < 2 ? "needs n >= 2" : "hypotheses not met";
        }
        v.reasons.push_back(std::move(r));
    }

    {
        // The gcd criterion descends through the cabling machinery, which
        // lives on biquandles; singletons and non-biquandles are out (the
        // constant-cycle permutation solutions are counterexamples otherwise).
        CriterionRecord r;
        r.name = "gcd-order-of-q";
        DiagonalMap q = diagonal_map(s);
        if (!q.bijective) {
            r.inputs = "q not bijective";
            r.fired = false;
            r.note = "diagonal map is not a permutation";
        } else {
            long long qorder = q.permutation().order();
            long long g = std::gcd(static_cast<long long>(s.n), qorder);
            r.inputs = "n=" + std::to_string(s.n) + ", |q|=" + std::to_string(qorder) + ", gcd=" + std::to_string(g) +
                       std::string(", biquandle=") + (flags.biquandle ? "yes" : "no");
            r.fired = s.n >= 2 && flags.biquandle && nilpotent && g == 1;
            if (r.fired) {
                r.note = "decomposable";
                if (!decomposable) throw InternalError("gcd criterion contradicts the orbit count");
            } else {
                r.note = s.n < 2 ? "needs n >= 2" : (!flags.biquandle ? "needs a biquandle" : "hypotheses not met");
            }
        }
        v.reasons.push_back(std::move(r));
    }

    {
        CriterionRecord r;
        r.name = "q-partition-bound";
        r.fired = false;
        DiagonalMap q = diagonal_map(s);
        bool derived_mp = multipermutation_level(derived_solution(s)).finite;
        if (decomposable || !derived_mp || !q.bijective) {
            r.inputs = "n=" + std::to_string(s.n);
            r.note = "applies only to indecomposable solutions with multipermutation derived solution";
        } else {
            auto parts = q.permutation().cycle_type();
            std::string fired_at;
            for (int p = 2; p <= s.n; ++p) {
                if (!detail::is_prime(p) || s.n % p != 0) continue;
                int m = s.n / p;
                if (m % p == 0) continue;
                if (auto t = forbidden_q_partition_term(p, m, parts)) {
                    fired_at = "p=" + std::to_string(p) + ", s=" + std::to_string(m) + ", t=" + std::to_string(*t);
                    break;
                }
            }
            r.inputs = "n=" + std::to_string(s.n) + ", checked all prime factorizations n=p*s with p prime, p!|s";
            if (!fired_at.empty()) {
                r.fired = true;
                r.note = "criterion would have ruled out indecomposability at " + fired_at;
                v.reasons.push_back(r);
                throw InternalError("q-partition bound contradicts the orbit count: " + fired_at);
            }
            r.note = "no forbidden term";
        }
        v.reasons.push_back(std::move(r));
    }
    return v;
}

struct SimplicityResult {
    bool simple = false;
    std::optional<EquivPartition> witness;  // a proper nontrivial congruence, if any
};

// A solution is simple iff the smallest congruence containing any pair is
// total. Each generated quotient is validated along the way.
inline SimplicityResult is_simple(const Solution& s) {
    if (s.n < 2) throw PreconditionError("is_simple: needs n >= 2");
    for (int x = 0; x < s.n; ++x) {
        for (int y = x + 1; y < s.n; ++y) {
            EquivPartition p = congruence_closure(s, {{x, y}});
            Solution q = detail::validated_quotient(s, p, "simplicity congruence");
            (void)q;
            if (p.num_classes > 1) {
                return {false, p};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace ybx
