#pragma once

#include <string>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/permutation.hpp"

namespace ybx {

// A binary system (S, <|) given by its full operation table, op[x][y] = x <| y.
struct Rack {
    int n = 0;
    std::vector<std::vector<int>> op;

    int apply(int x, int y) const { return op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
};

struct RackReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline void check_rack_shape(const Rack& r) {
    if (r.n < 1) throw StructuralError("rack: n must be >= 1");
    if (static_cast<int>(r.op.size()) != r.n) throw StructuralError("rack: op table has wrong row count");
    for (const auto& row : r.op) {
        if (static_cast<int>(row.size()) != r.n) throw StructuralError("rack: op table has a ragged row");
        for (int v : row) {
            if (v < 0 || v >= r.n) throw StructuralError("rack: op entry out of range");
        }
    }
}

// Rack axioms: every right translation x -> x <| y is a bijection and
// (x <| y) <| z = (x <| z) <| (y <| z) for all triples.
inline RackReport validate_rack(const Rack& r) {
    check_rack_shape(r);
    RackReport rep;
    for (int y = 0; y < r.n; ++y) {
        std::vector<int> col(static_cast<std::size_t>(r.n));
        for (int x = 0; x < r.n; ++x) col[static_cast<std::size_t>(x)] = r.apply(x, y);
        if (!Permutation::is_bijection(col)) {
            rep.violations.push_back("right translation by " + std::to_string(y) + " is not a bijection");
        }
    }
    for (int x = 0; x < r.n; ++x) {
        for (int y = 0; y < r.n; ++y) {
            for (int z = 0; z < r.n; ++z) {
                int lhs = r.apply(r.apply(x, y), z);
                int rhs = r.apply(r.apply(x, z), r.apply(y, z));
                if (lhs != rhs) {
                    rep.violations.push_back("self-distributivity fails at (" + std::to_string(x) + "," +
                                             std::to_string(y) + "," + std::to_string(z) + ")");
                    return rep;
                }
            }
        }
    }
    return rep;
}

inline bool is_quandle(const Rack& r) {
    for (int x = 0; x < r.n; ++x) {
        if (r.apply(x, x) != x) return false;
    }
    return true;
}

}  // namespace ybx
