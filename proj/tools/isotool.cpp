// Command-line workbench: construct graphs, solve and bound isolation
// numbers, enumerate small graphs, and run verification campaigns.
#include "CLI11.hpp"
#include "json.hpp"

#include "iso/bound.hpp"
#include "iso/detectors.hpp"
#include "iso/family.hpp"
#include "iso/generators.hpp"
#include "iso/graph.hpp"
#include "iso/harness.hpp"
#include "iso/solver.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

// --graph accepts a literal graph6 string or a path to a file whose first
// non-empty line holds one.
iso::Graph load_graph(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty()) return iso::from_graph6(line);
        }
        throw std::invalid_argument("no graph6 line in " + arg);
    }
    return iso::from_graph6(arg);
}

const char* kind_name(iso::FamilyKind kind) {
    switch (kind) {
        case iso::FamilyKind::SingleVertex: return "vertex";
        case iso::FamilyKind::Star: return "star";
        case iso::FamilyKind::Clique: return "clique";
        case iso::FamilyKind::CycleLen: return "cycle";
        case iso::FamilyKind::PathOrder: return "path";
        case iso::FamilyKind::AllCycles: return "cycle";
        case iso::FamilyKind::RegularMinDegree: return "regular";
        case iso::FamilyKind::ChromaticMin: return "chromatic";
        case iso::FamilyKind::Union: return "union";
    }
    return "unknown";
}

ordered_json witness_json(const iso::Witness& w) {
    ordered_json out;
    out["kind"] = kind_name(w.kind);
    out["vertices"] = w.vertices;
    ordered_json edges = ordered_json::array();
    for (const iso::Edge& e : w.edges) edges.push_back({e.first, e.second});
    out["edges"] = std::move(edges);
    return out;
}

ordered_json certificate_json(const iso::IsolationCertificate& cert) {
    ordered_json out;
    out["graph6"] = cert.graph6;
    out["family"] = iso::family_to_string(cert.spec);
    out["set"] = cert.set;
    out["size"] = cert.size;
    out["optimal"] = cert.optimal;
    out["budget_used"] = cert.search_budget_used;
    out["residual_witness"] =
        cert.residual_witness ? witness_json(*cert.residual_witness) : ordered_json();
    return out;
}

ordered_json trace_json(const iso::BoundTraceNode& node) {
    ordered_json out;
    out["tag"] = node.tag;
    out["n"] = node.n;
    out["k"] = node.k;
    out["bound"] = node.bound;
    if (node.v) out["v"] = node.v;
    if (node.x) out["x"] = node.x;
    if (node.y) out["y"] = node.y;
    if (node.z) out["z"] = node.z;
    if (node.w) out["w"] = node.w;
    if (!node.W.empty()) out["W"] = node.W;
    if (!node.Z.empty()) out["Z"] = node.Z;
    out["set"] = node.set;
    ordered_json children = ordered_json::array();
    for (const iso::BoundTraceNode& child : node.children)
        children.push_back(trace_json(child));
    out["children"] = std::move(children);
    return out;
}

// Comma or space separated vertex list, e.g. "1,3,6".
iso::VertexSet parse_set(const std::string& text) {
    iso::VertexSet out;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    return out;
}

void emit_report(const std::vector<iso::VerificationRecord>& rows,
                 const std::string& out_path, bool timings) {
    std::string text = out_path.size() > 5 &&
                               out_path.substr(out_path.size() - 5) == ".json"
                           ? iso::verification_json(rows, timings)
                           : iso::verification_csv(rows, timings);
    if (out_path.empty())
        std::cout << iso::verification_csv(rows, timings);
    else
        iso::write_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for isolation numbers of graphs"};
    app.fallthrough();
    app.set_config("--config")->description("key=value defaults; flags override");

    std::uint64_t budget_limit = 100'000'000;
    int solver_guard = 26;
    int enum_guard = 8;
    bool timings = false;
    std::uint64_t seed = 2026;
    app.add_option("--budget", budget_limit, "search budget (nodes)");
    app.add_option("--guard", solver_guard, "largest order the solver accepts");
    app.add_option("--enum-guard", enum_guard, "largest order enumeration accepts");
    app.add_flag("--timings", timings, "record per-row runtimes (reports stop being byte-stable)");
    app.add_option("--seed", seed, "seed for randomized campaigns");

    // gen
    auto* gen = app.add_subcommand("gen", "construct a graph; graph6 plus a role map");
    std::string gen_family;
    int gen_n = 0, gen_k = 0;
    gen->add_option("--family", gen_family,
                    "B | Ck | BnCk | BnCk-prime | complete | star | path | cycle | cycle-power")
        ->required();
    gen->add_option("--n", gen_n, "order (or r for cycle-power)");
    gen->add_option("--k", gen_k, "parameter k");

    // solve
    auto* solve = app.add_subcommand("solve", "exact smallest isolating set");
    std::string solve_graph, solve_family, solve_set;
    bool solve_fast = false;
    solve->add_option("--graph", solve_graph, "graph6 string or file")->required();
    solve->add_option("--family", solve_family, "family spec, e.g. F01:3")->required();
    solve->add_option("--set", solve_set, "check this vertex set instead of solving");
    solve->add_flag("--fast", solve_fast, "prune dominated candidates");

    // bound
    auto* bnd = app.add_subcommand("bound", "constructive isolating set within the bound");
    std::string bound_graph, bound_family = "F01", bound_trace;
    int bound_k = 0;
    bnd->add_option("--graph", bound_graph, "graph6 string or file")->required();
    bnd->add_option("--k", bound_k, "family parameter k")->required();
    bnd->add_option("--family", bound_family, "F0 | F1 | F2 | F3 | F01");
    bnd->add_option("--trace", bound_trace, "also write the recursion trace to this file");

    // enum
    auto* enm = app.add_subcommand("enum", "stream small graphs as graph6");
    int enum_n = 0;
    bool enum_all = false;
    enm->add_option("--n", enum_n, "order")->required();
    enm->add_flag("--all", enum_all, "include disconnected graphs");

    // verify
    auto* ver = app.add_subcommand("verify", "run one claim campaign");
    std::string ver_claim, ver_out;
    int ver_nmin = 0, ver_nmax = 0, ver_samples = 0;
    std::vector<int> ver_ks;
    ver->add_option("--claim", ver_claim, "claim id, e.g. T4")->required();
    ver->add_option("--nmin", ver_nmin, "smallest order");
    ver->add_option("--nmax", ver_nmax, "largest order");
    ver->add_option("--k", ver_ks, "k values (repeatable)");
    ver->add_option("--samples", ver_samples, "instances for randomized claims");
    ver->add_option("--out", ver_out, "report path (.csv or .json); stdout when absent");

    // survey
    auto* sur = app.add_subcommand("survey", "extremal ratios over all connected graphs");
    std::string sur_family, sur_out;
    int sur_n = 0, sur_nmin = 0, sur_nmax = 0;
    sur->add_option("--family", sur_family, "family spec")->required();
    sur->add_option("--n", sur_n, "single order");
    sur->add_option("--nmin", sur_nmin, "range start");
    sur->add_option("--nmax", sur_nmax, "range end");
    sur->add_option("--out", sur_out, "table path (.csv or .json); stdout when absent");

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            iso::LabeledConstruction lc;
            if (gen_family == "B") lc = iso::construction_B(gen_n, gen_k);
            else if (gen_family == "Ck") lc.graph = iso::gadget_C(gen_k);
            else if (gen_family == "BnCk") lc = iso::construction_BnCk(gen_n, gen_k);
            else if (gen_family == "BnCk-prime") lc = iso::construction_BnCk_prime(gen_n, gen_k);
            else if (gen_family == "complete") lc.graph = iso::complete_graph(gen_n);
            else if (gen_family == "star") lc.graph = iso::star_graph(gen_k);
            else if (gen_family == "path") lc.graph = iso::path_graph(gen_n);
            else if (gen_family == "cycle") lc.graph = iso::cycle_graph(gen_n);
            else if (gen_family == "cycle-power") lc.graph = iso::cycle_power(gen_n, gen_k);
            else throw std::invalid_argument("unknown construction: " + gen_family);
            std::cout << iso::to_graph6(lc.graph) << "\n";
            ordered_json roles = ordered_json::object();
            for (const auto& [name, verts] : lc.roles) roles[name] = verts;
            std::cout << roles.dump(2) << "\n";
        } else if (*solve) {
            iso::Graph g = load_graph(solve_graph);
            iso::FamilySpec fam = iso::parse_family(solve_family);
            iso::Budget budget(budget_limit);
            iso::IsolationCertificate cert;
            if (solve->count("--set")) {
                cert = iso::check_set(g, fam, parse_set(solve_set), budget);
            } else {
                iso::SolveOptions opts;
                opts.guard_n = solver_guard;
                opts.maximal_candidates = solve_fast;
                cert = iso::iota_exact(g, fam, budget, opts);
            }
            std::cout << certificate_json(cert).dump(2) << "\n";
        } else if (*bnd) {
            iso::Graph g = load_graph(bound_graph);
            iso::Budget budget(budget_limit);
            iso::BoundResult result;
            if (bound_family == "F01")
                result = iso::construct_isolating_set(g, bound_k, budget, solver_guard);
            else if (bound_family == "F0" || bound_family == "F1" ||
                     bound_family == "F2" || bound_family == "F3")
                result = iso::construct_for_family(g, bound_family[1] - '0', bound_k,
                                                   budget, solver_guard);
            else
                throw std::invalid_argument("unknown family: " + bound_family);
            ordered_json out;
            out["set"] = result.set;
            out["size"] = result.size;
            out["bound"] = result.bound;
            out["trace"] = trace_json(result.trace);
            if (!bound_trace.empty())
                iso::write_file(bound_trace, out["trace"].dump(2) + "\n");
            std::cout << out.dump(2) << "\n";
        } else if (*enm) {
            iso::Budget budget(budget_limit);
            const std::vector<iso::Graph> graphs =
                enum_all ? iso::enumerate_all(enum_n, budget, enum_guard)
                         : iso::enumerate_connected(enum_n, budget, enum_guard);
            for (const iso::Graph& g : graphs) std::cout << iso::to_graph6(g) << "\n";
        } else if (*ver) {
            iso::CampaignOptions opt;
            opt.nmin = ver_nmin;
            opt.nmax = ver_nmax;
            opt.ks = ver_ks;
            opt.samples = ver_samples;
            opt.seed = seed;
            opt.budget_limit = budget_limit;
            opt.solver_guard = solver_guard;
            opt.timings = timings;
            std::vector<iso::VerificationRecord> rows = iso::verify_claim(ver_claim, opt);
            emit_report(rows, ver_out, timings);
            int failures = 0;
            for (const iso::VerificationRecord& r : rows) failures += !r.holds;
            std::cerr << ver_claim << ": rows=" << rows.size()
                      << " failures=" << failures << "\n";
            return failures == 0 ? 0 : 1;
        } else if (*sur) {
            iso::CampaignOptions opt;
            opt.budget_limit = budget_limit;
            opt.solver_guard = solver_guard;
            int lo = sur_n > 0 ? sur_n : sur_nmin;
            int hi = sur_n > 0 ? sur_n : sur_nmax;
            std::vector<iso::SurveyRecord> rows =
                iso::survey(iso::parse_family(sur_family), lo, hi, opt);
            std::string text = sur_out.size() > 5 &&
                                       sur_out.substr(sur_out.size() - 5) == ".json"
                                   ? iso::survey_json(rows)
                                   : iso::survey_csv(rows);
            if (sur_out.empty())
                std::cout << iso::survey_csv(rows);
            else
                iso::write_file(sur_out, text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
