// ybx: command-line front end for finite Yang-Baxter solutions: validation,
// invariants, cabling, quotients, decomposability, simplicity, enumeration.
//
// Exit codes: 0 ok; 1 invariant violation found in the input; 2 usage or
// file-format error; 3 the requested question itself came out Unknown.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybx/ybx.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

ybx::Solution load_valid(const std::string& path) {
    ybx::Solution s = ybx::load_solution(path);
    auto rep = ybx::validate(s);
    if (!rep.ok()) {
        std::ostringstream msg;
        msg << path << " is not a valid solution:";
        for (const auto& item : rep.items) msg << "\n  " << item.invariant << ": " << item.witness;
        throw ybx::PreconditionError(msg.str());
    }
    return s;
}

json partition_json(const ybx::EquivPartition& p) {
    json cls = json::array();
    for (const auto& c : p.classes()) cls.push_back(c);
    return cls;
}

void emit_solution(const ybx::Solution& s, const std::string& out_path, bool to_stdout) {
    if (!out_path.empty()) {
        ybx::save_solution(s, out_path);
    }
    if (to_stdout || out_path.empty()) {
        std::cout << ybx::dump_solution(s);
    }
}

std::string verdict_name(ybx::Conclusion c) {
    switch (c) {
        case ybx::Conclusion::Decomposable: return "decomposable";
        case ybx::Conclusion::Indecomposable: return "indecomposable";
        case ybx::Conclusion::Simple: return "simple";
        case ybx::Conclusion::NotSimple: return "not-simple";
        default: return "no-verdict";
    }
}

int cmd_validate(const std::string& path, bool as_json) {
    ybx::Solution s = ybx::load_solution(path);
    auto rep = ybx::validate(s);
    if (as_json) {
        json j;
        j["valid"] = rep.ok();
        j["violations"] = json::array();
        for (const auto& item : rep.items) {
            j["violations"].push_back({{"invariant", item.invariant}, {"witness", item.witness}});
        }
        std::cout << j.dump(2) << "\n";
    } else if (rep.ok()) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid:\n";
        for (const auto& item : rep.items) std::cout << "  " << item.invariant << ": " << item.witness << "\n";
    }
    return rep.ok() ? kExitOk : kExitInvariant;
}

int cmd_info(const std::string& path, int l_max, std::size_t node_cap, bool as_json) {
    ybx::Solution s = load_valid(path);
    auto flags = ybx::classify(s);
    auto q = ybx::diagonal_map(s);
    auto dec = ybx::max_decomposability(s);
    auto verdict = ybx::indecomposability_report(s);

    bool has_d = q.bijective;
    long long d = 0;
    if (has_d) d = ybx::dehornoy_class(s);

    ybx::Tristate inj = ybx::Tristate::Unknown;
    if (q.bijective) inj = ybx::is_injective(s, l_max, node_cap);

    if (as_json) {
        json j;
        j["n"] = s.n;
        if (!s.name.empty()) j["name"] = s.name;
        j["classify"] = {{"involutive", flags.involutive},
                         {"square_free", flags.square_free},
                         {"biquandle", flags.biquandle},
                         {"derived_is_quandle", flags.derived_is_quandle}};
        j["diagonal_bijective"] = q.bijective;
        if (has_d) {
            j["dehornoy_class"] = d;
            j["q_partition"] = ybx::q_partition(s);
        }
        j["orbits"] = {{"n_max", dec.n_max}, {"classes", partition_json(dec.partition)}};
        j["injective"] = inj == ybx::Tristate::True ? "true" : inj == ybx::Tristate::False ? "false" : "unknown";
        j["verdict"] = verdict_name(verdict.conclusion);
        j["criteria"] = json::array();
        for (const auto& r : verdict.reasons) {
            j["criteria"].push_back({{"name", r.name}, {"inputs", r.inputs}, {"fired", r.fired}, {"note", r.note}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (!s.name.empty()) std::cout << "name:            " << s.name << "\n";
        std::cout << "n:               " << s.n << "\n";
        std::cout << "involutive:      " << (flags.involutive ? "yes" : "no") << "\n";
        std::cout << "square-free:     " << (flags.square_free ? "yes" : "no") << "\n";
        std::cout << "biquandle:       " << (flags.biquandle ? "yes" : "no") << "\n";
        if (has_d) {
            std::cout << "dehornoy class:  " << d << "\n";
            std::cout << "diagonal map:    " << ybx::cycle_string(q.permutation()) << "\n";
            auto parts = ybx::q_partition(s);
            std::cout << "q-partition:     {";
            for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "," : "") << parts[i];
            std::cout << "}\n";
        } else {
            std::cout << "dehornoy class:  unavailable (diagonal map not bijective)\n";
        }
        std::cout << "orbits:          " << ybx::partition_string(dec.partition) << " (n_max = " << dec.n_max << ")\n";
        std::cout << "injective:       "
                  << (inj == ybx::Tristate::True ? "yes" : inj == ybx::Tristate::False ? "no" : "unknown") << "\n";
        std::cout << "verdict:         " << verdict_name(verdict.conclusion) << "\n";
        for (const auto& r : verdict.reasons) {
            std::cout << "  [" << (r.fired ? "x" : " ") << "] " << r.name << " (" << r.inputs << "): " << r.note
                      << "\n";
        }
    }
    return kExitOk;
}

int cmd_cable(const std::string& path, long long k, bool reduce, const std::string& out, bool as_json) {
    ybx::Solution s = load_valid(path);
    if (!ybx::classify(s).biquandle) {
        std::cerr << "input is not a biquandle; cabling is defined for biquandles.\n"
                  << "hint: `ybx quotient --kind bq " << path << "` produces its associated biquandle.\n";
        return kExitInvariant;
    }
    long long use_k = k;
    if (reduce) {
        long long d = ybx::dehornoy_class(s);
        use_k = k % d;
        if (use_k == 0) use_k = d;
    }
    ybx::CabledSolution c = ybx::cable(s, use_k);
    emit_solution(c.result, out, as_json);
    return kExitOk;
}

int cmd_quotient(const std::string& path, const std::string& kind, int l_max, std::size_t node_cap,
                 const std::string& out, bool as_json) {
    ybx::Solution s = load_valid(path);
    ybx::QuotientResult res;
    if (kind == "bq") {
        res = ybx::bq_quotient(s);
    } else if (kind == "retract") {
        res = ybx::retract(s);
    } else if (kind == "inj") {
        if (!ybx::diagonal_map(s).bijective) {
            std::cerr << "injectivization unavailable: diagonal map is not bijective\n";
            return kExitUnknown;
        }
        res = ybx::injectivization(s, l_max, node_cap);
    } else {
        std::cerr << "unknown quotient kind: " << kind << "\n";
        return kExitUsage;
    }
    std::cout << "kernel: " << ybx::partition_string(res.kernel) << "\n";
    std::cout << "status: " << (res.status == ybx::QuotientStatus::Exact ? "exact" : "unknown") << "\n";
    std::cout << "size:   " << res.quotient.n << "\n";
    if (!out.empty() || as_json) emit_solution(res.quotient, out, as_json);
    return res.status == ybx::QuotientStatus::Exact ? kExitOk : kExitUnknown;
}

int cmd_decompose(const std::string& path, bool as_json) {
    ybx::Solution s = load_valid(path);
    auto dec = ybx::max_decomposability(s);
    auto cert = ybx::is_decomposable(s);
    if (as_json) {
        json j;
        j["n_max"] = dec.n_max;
        j["classes"] = partition_json(dec.partition);
        j["decomposable"] = cert.decomposable;
        if (cert.certificate) j["certificate"] = *cert.certificate;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n_max:     " << dec.n_max << "\n";
        std::cout << "partition: " << ybx::partition_string(dec.partition) << "\n";
        if (cert.certificate) {
            std::cout << "certificate onto twist-2: [";
            for (std::size_t i = 0; i < cert.certificate->size(); ++i) {
                std::cout << (i ? "," : "") << (*cert.certificate)[i];
            }
            std::cout << "]\n";
        } else {
            std::cout << "certificate: none (indecomposable)\n";
        }
    }
    return kExitOk;
}

int cmd_simple(const std::string& path, bool as_json) {
    ybx::Solution s = load_valid(path);
    auto res = ybx::is_simple(s);
    if (as_json) {
        json j;
        j["simple"] = res.simple;
        if (res.witness) j["witness"] = partition_json(*res.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "simple: " << (res.simple ? "yes" : "no") << "\n";
        if (res.witness) std::cout << "witness kernel: " << ybx::partition_string(*res.witness) << "\n";
    }
    return kExitOk;
}

int cmd_morphism(const std::string& map_str, const std::string& spath, const std::string& tpath) {
    ybx::Solution s = load_valid(spath);
    ybx::Solution t = load_valid(tpath);
    std::vector<int> f;
    std::stringstream ss(map_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(std::stoi(tok));
    bool ok = ybx::is_morphism(f, s, t);
    std::cout << (ok ? "morphism" : "not a morphism") << "\n";
    return ok ? kExitOk : kExitInvariant;
}

int cmd_enumerate(int n, const std::string& out_dir, bool slow, bool as_json) {
    if (n == 4 && !slow) {
        std::cerr << "n = 4 enumeration is slow; pass --slow to run it\n";
        return kExitUsage;
    }
    namespace fs = std::filesystem;
    if (!out_dir.empty()) fs::create_directories(out_dir);
    long long count = 0;
    std::vector<std::string> files;
    ybx::enumerate_solutions(n, [&](const ybx::Solution& s) {
        ++count;
        if (!out_dir.empty()) {
            ybx::Solution named = s;
            char buf[32];
            std::snprintf(buf, sizeof(buf), "sol_%06lld", count);
            named.name = buf;
            std::string fname = std::string(buf) + ".json";
            ybx::save_solution(named, (fs::path(out_dir) / fname).string());
            files.push_back(fname);
        }
    });
    if (!out_dir.empty()) {
        json manifest;
        manifest["n"] = n;
        manifest["count"] = count;
        manifest["files"] = files;
        std::ofstream m(fs::path(out_dir) / "manifest.json");
        m << manifest.dump(2) << "\n";
    }
    if (as_json) {
        json j;
        j["n"] = n;
        j["count"] = count;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "solutions on " << n << " elements: " << count << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Yang-Baxter solutions: validation, invariants, cabling, quotients"};
    app.require_subcommand(1);

    std::string in_path, out_path, kind = "bq", map_str;
    std::string t_path;
    long long k = 1;
    int n = 3;
    int l_max = ybx::kDefaultLMax;
    std::size_t node_cap = ybx::kDefaultNodeCap;
    bool as_json = false, reduce = false, slow = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the solution axioms of a file");
    validate_cmd->add_option("file", in_path)->required();
    validate_cmd->add_flag("--json", as_json);

    auto* info_cmd = app.add_subcommand("info", "classification flags, invariants and verdicts");
    info_cmd->add_option("file", in_path)->required();
    info_cmd->add_option("--l-max", l_max);
    info_cmd->add_option("--node-cap", node_cap);
    info_cmd->add_flag("--json", as_json);

    auto* cable_cmd = app.add_subcommand("cable", "k-cabled solution of a biquandle");
    cable_cmd->add_option("file", in_path)->required();
    cable_cmd->add_option("-k", k, "cabling exponent")->required();
    cable_cmd->add_option("-o,--output", out_path);
    cable_cmd->add_flag("--reduce", reduce, "reduce k modulo the Dehornoy class");
    cable_cmd->add_flag("--json", as_json);

    auto* quot_cmd = app.add_subcommand("quotient", "biquandle / retract / injectivization quotient");
    quot_cmd->add_option("file", in_path)->required();
    quot_cmd->add_option("--kind", kind, "bq|retract|inj")->required();
    quot_cmd->add_option("-o,--output", out_path);
    quot_cmd->add_option("--l-max", l_max);
    quot_cmd->add_option("--node-cap", node_cap);
    quot_cmd->add_flag("--json", as_json);

    auto* dec_cmd = app.add_subcommand("decompose", "orbit partition and maximal decomposability");
    dec_cmd->add_option("file", in_path)->required();
    dec_cmd->add_flag("--json", as_json);

    auto* simple_cmd = app.add_subcommand("simple", "simplicity with a witness congruence");
    simple_cmd->add_option("file", in_path)->required();
    simple_cmd->add_flag("--json", as_json);

    auto* mor_cmd = app.add_subcommand("morphism", "check a map between two solutions");
    mor_cmd->add_option("--map", map_str, "comma-separated images, e.g. 0,0,1")->required();
    mor_cmd->add_option("source", in_path)->required();
    mor_cmd->add_option("target", t_path)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "all solutions on n elements");
    enum_cmd->add_option("-n", n, "number of elements")->required();
    enum_cmd->add_option("-o,--output", out_path, "directory for one JSON per solution");
    enum_cmd->add_flag("--slow", slow, "allow the n = 4 search");
    enum_cmd->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(in_path, as_json);
        if (info_cmd->parsed()) return cmd_info(in_path, l_max, node_cap, as_json);
        if (cable_cmd->parsed()) return cmd_cable(in_path, k, reduce, out_path, as_json);
        if (quot_cmd->parsed()) return cmd_quotient(in_path, kind, l_max, node_cap, out_path, as_json);
        if (dec_cmd->parsed()) return cmd_decompose(in_path, as_json);
        if (simple_cmd->parsed()) return cmd_simple(in_path, as_json);
        if (mor_cmd->parsed()) return cmd_morphism(map_str, in_path, t_path);
        if (enum_cmd->parsed()) return cmd_enumerate(n, out_path, slow, as_json);
    } catch (const ybx::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ybx::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const ybx::InternalError& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
