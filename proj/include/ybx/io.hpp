#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybx/errors.hpp"
#include "ybx/solution.hpp"

namespace ybx {

// File format: {"n": int, "name": optional string, "lambda": n x n, "rho": n x n}
// with lambda[x][y] = lambda_x(y) and rho[y][x] = rho_y(x), 0-indexed.
// The variant {"n":..., "lambda":..., "involutive": true} omits "rho" and
// derives it from rho_y(x) = lambda^{-1}_{lambda_x(y)}(x).

namespace detail {

inline std::vector<std::vector<int>> parse_table(const nlohmann::json& j, int n, const std::string& field) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
        throw StructuralError("field '" + field + "' must be an array of " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<int>> t;
    t.reserve(static_cast<std::size_t>(n));
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw StructuralError("field '" + field + "' has a row of wrong length");
        }
        std::vector<int> r;
        r.reserve(static_cast<std::size_t>(n));
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw StructuralError("field '" + field + "' has a non-integer entry");
            int x = v.get<int>();
            if (x < 0 || x >= n) throw StructuralError("field '" + field + "' has an out-of-range entry");
            r.push_back(x);
        }
        t.push_back(std::move(r));
    }
    return t;
}

}  // namespace detail

inline Solution solution_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw StructuralError("top-level JSON value must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw StructuralError("field 'n' missing or not an integer");
    Solution s;
    s.n = j["n"].get<int>();
    if (s.n < 1) throw StructuralError("field 'n' must be >= 1");
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw StructuralError("field 'name' must be a string");
        s.name = j["name"].get<std::string>();
    }
    if (!j.contains("lambda")) throw StructuralError("field 'lambda' missing");
    s.lambda = detail::parse_table(j["lambda"], s.n, "lambda");

    bool involutive_variant = j.contains("involutive") && j["involutive"].is_boolean() && j["involutive"].get<bool>();
    if (involutive_variant) {
        if (j.contains("rho")) throw StructuralError("fields 'rho' and 'involutive' are mutually exclusive");
        for (int x = 0; x < s.n; ++x) {
            if (!Permutation::is_bijection(s.lambda[static_cast<std::size_t>(x)])) {
                throw StructuralError("field 'lambda' row " + std::to_string(x) +
                                      " must be a bijection to derive 'rho'");
            }
        }
        auto lam_inv = invert_rows(s.lambda);
        s.rho.assign(static_cast<std::size_t>(s.n), std::vector<int>(static_cast<std::size_t>(s.n)));
        for (int y = 0; y < s.n; ++y) {
            for (int x = 0; x < s.n; ++x) {
                int w = s.lam(x, y);
                s.rho[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
                    lam_inv[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)];
            }
        }
    } else {
        if (!j.contains("rho")) throw StructuralError("field 'rho' missing");
        s.rho = detail::parse_table(j["rho"], s.n, "rho");
    }
    return s;
}

inline Solution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("invalid JSON in " + path + ": " + e.what());
    }
    return solution_from_json(j);
}

// Canonical serialization: keys ordered n, name, lambda, rho; one row per
// line; no floats. Byte-stable so that identity pipelines round-trip.
inline std::string dump_solution(const Solution& s) {
    std::ostringstream out;
    auto put_table = [&](const std::vector<std::vector<int>>& t) {
        out << "[\n";
        for (std::size_t i = 0; i < t.size(); ++i) {
            out << "    [";
            for (std::size_t j = 0; j < t[i].size(); ++j) {
                if (j) out << ", ";
                out << t[i][j];
            }
            out << (i + 1 < t.size() ? "],\n" : "]\n");
        }
        out << "  ]";
    };
    out << "{\n  \"n\": " << s.n;
    if (!s.name.empty()) {
        out << ",\n  \"name\": " << nlohmann::json(s.name).dump();
    }
    out << ",\n  \"lambda\": ";
    put_table(s.lambda);
    out << ",\n  \"rho\": ";
    put_table(s.rho);
    out << "\n}\n";
    return out.str();
}

inline void save_solution(const Solution& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << dump_solution(s);
}

}  // namespace ybx
