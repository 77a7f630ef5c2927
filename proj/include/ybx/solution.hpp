#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/permutation.hpp"
#include "ybx/rack.hpp"

namespace ybx {

// A finite set-theoretic structure (X, r) on X = {0,...,n-1} with
// r(x,y) = (lambda[x][y], rho[y][x]). Plain data; validate() decides whether
// it is an actual bijective non-degenerate solution.
struct Solution {
    int n = 0;
    std::vector<std::vector<int>> lambda;  // lambda[x][y] = lambda_x(y)
    std::vector<std::vector<int>> rho;     // rho[y][x]    = rho_y(x)
    std::string name;

    int lam(int x, int y) const { return lambda[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    int rh(int y, int x) const { return rho[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; }
    std::pair<int, int> r(int x, int y) const { return {lam(x, y), rh(y, x)}; }

    bool same_tables(const Solution& o) const { return n == o.n && lambda == o.lambda && rho == o.rho; }
};

inline void check_shape(const Solution& s) {
    if (s.n < 1) throw StructuralError("solution: n must be >= 1");
    auto check = [&](const std::vector<std::vector<int>>& t, const char* which) {
        if (static_cast<int>(t.size()) != s.n) {
            throw StructuralError(std::string("solution: ") + which + " has wrong row count");
        }
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != s.n) {
                throw StructuralError(std::string("solution: ") + which + " has a ragged row");
            }
            for (int v : row) {
                if (v < 0 || v >= s.n) {
                    throw StructuralError(std::string("solution: ") + which + " entry out of range");
                }
            }
        }
    };
    check(s.lambda, "lambda");
    check(s.rho, "rho");
}

struct ValidationReport {
    struct Item {
        std::string invariant;
        std::string witness;
    };
    std::vector<Item> items;
    bool ok() const { return items.empty(); }
};

// Checks the solution axioms: all lambda_x and rho_y bijective, r bijective on
// pairs, and the braid relation on all n^3 triples by direct enumeration.
// Malformed tables throw StructuralError instead of being reported.
inline ValidationReport validate(const Solution& s) {
    check_shape(s);
    ValidationReport rep;
    for (int x = 0; x < s.n; ++x) {
        if (!Permutation::is_bijection(s.lambda[static_cast<std::size_t>(x)])) {
            rep.items.push_back({"lambda-bijective", "lambda_" + std::to_string(x) + " is not a bijection"});
        }
    }
    for (int y = 0; y < s.n; ++y) {
        if (!Permutation::is_bijection(s.rho[static_cast<std::size_t>(y)])) {
            rep.items.push_back({"rho-bijective", "rho_" + std::to_string(y) + " is not a bijection"});
        }
    }
    if (!rep.ok()) return rep;  // the remaining checks presuppose bijective rows

    std::vector<char> seen(static_cast<std::size_t>(s.n) * static_cast<std::size_t>(s.n), 0);
    bool collision = false;
    for (int x = 0; x < s.n && !collision; ++x) {
        for (int y = 0; y < s.n; ++y) {
            auto [u, v] = s.r(x, y);
            std::size_t code = static_cast<std::size_t>(u) * static_cast<std::size_t>(s.n) + static_cast<std::size_t>(v);
            if (seen[code]) {
                rep.items.push_back({"r-bijective", "r(" + std::to_string(x) + "," + std::to_string(y) + ") collides at (" +
                                                        std::to_string(u) + "," + std::to_string(v) + ")"});
                collision = true;  // one witness suffices
                break;
            }
            seen[code] = 1;
        }
    }

    // (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r), rightmost first.
    auto r12 = [&](std::array<int, 3>& v) {
        auto [a, b] = s.r(v[0], v[1]);
        v[0] = a;
        v[1] = b;
    };
    auto r23 = [&](std::array<int, 3>& v) {
        auto [a, b] = s.r(v[1], v[2]);
        v[1] = a;
        v[2] = b;
    };
    for (int x = 0; x < s.n; ++x) {
        for (int y = 0; y < s.n; ++y) {
            for (int z = 0; z < s.n; ++z) {
                std::array<int, 3> lhs{x, y, z}, rhs{x, y, z};
                r12(lhs);
                r23(lhs);
                r12(lhs);
                r23(rhs);
                r12(rhs);
                r23(rhs);
                if (lhs != rhs) {
                    rep.items.push_back({"braid", "braid relation fails at (" + std::to_string(x) + "," +
                                                      std::to_string(y) + "," + std::to_string(z) + ")"});
                    return rep;
                }
            }
        }
    }
    return rep;
}

inline bool is_valid(const Solution& s) { return validate(s).ok(); }

inline Permutation lambda_perm(const Solution& s, int x) {
    return Permutation(s.lambda[static_cast<std::size_t>(x)]);
}

inline Permutation rho_perm(const Solution& s, int y) {
    return Permutation(s.rho[static_cast<std::size_t>(y)]);
}

inline std::vector<std::vector<int>> invert_rows(const std::vector<std::vector<int>>& t) {
    std::vector<std::vector<int>> inv(t.size(), std::vector<int>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            inv[i][static_cast<std::size_t>(t[i][j])] = static_cast<int>(j);
        }
    }
    return inv;
}

inline void check_index(const Solution& s, int y) {
    if (y < 0 || y >= s.n) throw PreconditionError("index out of range");
}

// sigma_y(x) = lambda_y(rho_{lambda_x^{-1}(y)}(x)), the right translation of
// the derived rack: sigma_y(x) = x <| y.
inline Permutation sigma(const Solution& s, int y) {
    check_index(s, y);
    auto lam_inv = invert_rows(s.lambda);
    std::vector<int> img(static_cast<std::size_t>(s.n));
    for (int x = 0; x < s.n; ++x) {
        int t = lam_inv[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        img[static_cast<std::size_t>(x)] = s.lam(y, s.rh(t, x));
    }
    return Permutation(std::move(img));
}

// sigma'_y(x) = lambda_y^{-1}(rho_{lambda_x^{-1}(y)}(x)); these are the
// exponents of the defining relations x (+) y = y (+) sigma'_y(x) of the
// derived monoid. Satisfies sigma_y(x) = lambda_y(sigma'_y(x)).
inline Permutation sigma_prime(const Solution& s, int y) {
    check_index(s, y);
    auto lam_inv = invert_rows(s.lambda);
    std::vector<int> img(static_cast<std::size_t>(s.n));
    for (int x = 0; x < s.n; ++x) {
        int t = lam_inv[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        img[static_cast<std::size_t>(x)] = lam_inv[static_cast<std::size_t>(y)][static_cast<std::size_t>(s.rh(t, x))];
    }
    return Permutation(std::move(img));
}

// The (left) derived rack x <| y = sigma_y(x). Rack axioms are guaranteed for
// valid solutions but asserted anyway.
inline Rack derived_rack(const Solution& s) {
    Rack r;
    r.n = s.n;
    r.op.assign(static_cast<std::size_t>(s.n), std::vector<int>(static_cast<std::size_t>(s.n)));
    for (int y = 0; y < s.n; ++y) {
        Permutation sy = sigma(s, y);
        for (int x = 0; x < s.n; ++x) r.op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = sy(x);
    }
    auto rep = validate_rack(r);
    if (!rep.ok()) throw InternalError("derived rack fails rack axioms: " + rep.violations.front());
    return r;
}

// The derived solution r(x,y) = (y, x <| y) of the derived rack.
inline Solution derived_solution(const Solution& s) {
    Rack rk = derived_rack(s);
    Solution d;
    d.n = s.n;
    d.name = s.name.empty() ? std::string() : s.name + "-derived";
    d.lambda.assign(static_cast<std::size_t>(s.n), Permutation::identity(s.n).images());
    d.rho.assign(static_cast<std::size_t>(s.n), std::vector<int>(static_cast<std::size_t>(s.n)));
    for (int y = 0; y < s.n; ++y) {
        for (int x = 0; x < s.n; ++x) {
            d.rho[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = rk.apply(x, y);
        }
    }
    return d;
}

struct ClassifyFlags {
    bool involutive = false;
    bool square_free = false;
    bool biquandle = false;
    bool derived_is_quandle = false;
};

inline ClassifyFlags classify(const Solution& s) {
    ClassifyFlags f;
    f.involutive = true;
    for (int x = 0; x < s.n && f.involutive; ++x) {
        for (int y = 0; y < s.n; ++y) {
            auto [u, v] = s.r(x, y);
            if (s.r(u, v) != std::pair<int, int>(x, y)) {
                f.involutive = false;
                break;
            }
        }
    }
    f.square_free = true;
    for (int x = 0; x < s.n; ++x) {
        if (s.r(x, x) != std::pair<int, int>(x, x)) {
            f.square_free = false;
            break;
        }
    }
    // biquandle <=> the derived rack is a quandle <=> sigma_x(x) = x for all x
    auto lam_inv = invert_rows(s.lambda);
    f.biquandle = true;
    for (int x = 0; x < s.n; ++x) {
        int t = lam_inv[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)];
        if (s.lam(x, s.rh(t, x)) != x) {
            f.biquandle = false;
            break;
        }
    }
    f.derived_is_quandle = f.biquandle;
    return f;
}

// The diagonal map q(x) = lambda_x^{-1}(x). For a biquandle this is a
// bijection; in general it need not be, so the raw images are kept and the
// bijectivity is flagged. Operations that need q as a permutation refuse
// non-bijective diagonals.
struct DiagonalMap {
    std::vector<int> images;
    bool bijective = false;

    int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }

    Permutation permutation() const {
        if (!bijective) throw PreconditionError("diagonal map is not bijective");
        return Permutation(images);
    }
};

inline DiagonalMap diagonal_map(const Solution& s) {
    auto lam_inv = invert_rows(s.lambda);
    DiagonalMap q;
    q.images.resize(static_cast<std::size_t>(s.n));
    for (int x = 0; x < s.n; ++x) {
        q.images[static_cast<std::size_t>(x)] = lam_inv[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)];
    }
    q.bijective = Permutation::is_bijection(q.images);
    return q;
}

// f is a morphism (X,r_s) -> (Y,r_t) iff (f x f) r_s = r_t (f x f) pointwise.
inline bool is_morphism(const std::vector<int>& f, const Solution& s, const Solution& t) {
    if (static_cast<int>(f.size()) != s.n) throw PreconditionError("morphism map has wrong domain size");
    for (int v : f) {
        if (v < 0 || v >= t.n) throw PreconditionError("morphism map image out of range");
    }
    for (int x = 0; x < s.n; ++x) {
        for (int y = 0; y < s.n; ++y) {
            auto [u, v] = s.r(x, y);
            auto [p, q] = t.r(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]);
            if (f[static_cast<std::size_t>(u)] != p || f[static_cast<std::size_t>(v)] != q) return false;
        }
    }
    return true;
}

}  // namespace ybx
