#pragma once

#include <string>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/monoid.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct CabledSolution {
    Solution base;
    long long k = 1;
    Solution result;
};

// The k-cabled solution of a biquandle, pulled back from the subsolution on
// the k-multiples inside the structure monoid:
//   lambda^(k)_x = lambda_{kx}
//   rho^(k)_y(x) = lambda_{kw}^{-1}(sigma_w^k(x))   with w = lambda^(k)_x(y).
// The result is validated and is again a biquandle.
inline CabledSolution cable(const Solution& s, long long k) {
    if (k < 1) throw PreconditionError("cable: k must be >= 1");
    if (!classify(s).biquandle) {
        throw PreconditionError("cable: cabling is defined for biquandles; take the associated biquandle quotient first");
    }
    const int n = s.n;
    std::vector<Permutation> lam_k(static_cast<std::size_t>(n)), lam_k_inv(static_cast<std::size_t>(n)),
        sig_k(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        lam_k[static_cast<std::size_t>(x)] = lambda_of_multiple(s, x, k);
        lam_k_inv[static_cast<std::size_t>(x)] = lam_k[static_cast<std::size_t>(x)].inverse();
        sig_k[static_cast<std::size_t>(x)] = sigma_of_multiple(s, x, k);
    }
    CabledSolution c;
    c.base = s;
    c.k = k;
    c.result.n = n;
    c.result.name = s.name;
    c.result.lambda.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    c.result.rho.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x) {
        c.result.lambda[static_cast<std::size_t>(x)] = lam_k[static_cast<std::size_t>(x)].images();
    }
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            int w = lam_k[static_cast<std::size_t>(x)](y);
            c.result.rho[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
                lam_k_inv[static_cast<std::size_t>(w)](sig_k[static_cast<std::size_t>(w)](x));
        }
    }
    auto rep = validate(c.result);
    if (!rep.ok()) {
        throw InternalError("cable: cabled tables fail validation: " + rep.items.front().witness);
    }
    if (!classify(c.result).biquandle) {
        throw InternalError("cable: cabled solution is not a biquandle");
    }
    return c;
}

// Composition law: cabling by k then k' equals cabling by k*k', table for table.
inline bool cable_of_cable_check(const Solution& s, long long k, long long k2) {
    Solution once = cable(s, k).result;
    Solution twice = cable(once, k2).result;
    Solution direct = cable(s, k * k2).result;
    return twice.same_tables(direct);
}

// Morphisms of biquandles remain morphisms after cabling both sides.
inline bool cabled_morphism_check(const std::vector<int>& f, const Solution& s, const Solution& t, long long k) {
    if (!classify(s).biquandle || !classify(t).biquandle) {
        throw PreconditionError("cabled_morphism_check: both solutions must be biquandles");
    }
    if (!is_morphism(f, s, t)) {
        throw PreconditionError("cabled_morphism_check: f is not a morphism of the base solutions");
    }
    return is_morphism(f, cable(s, k).result, cable(t, k).result);
}

}  // namespace ybx
