#include "iso/harness.hpp"

#include "iso/bound.hpp"
#include "iso/detectors.hpp"
#include "iso/generators.hpp"
#include "iso/solver.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace iso {

Fraction::Fraction(long long p, long long q) : num(p), den(q) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
}

namespace {

using Clock = std::chrono::steady_clock;

void sort_rows(std::vector<VerificationRecord>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         return std::tie(a.claim, a.n, a.k, a.graph6, a.family) <
                                std::tie(b.claim, b.n, b.k, b.graph6, b.family);
                     });
}

struct Campaign {
    const CampaignOptions& opt;
    std::vector<VerificationRecord> rows;

    // Runs one instance; budget exhaustion and internal inconsistencies
    // become row data instead of aborting the campaign.
    template <typename Fill>
    void row(VerificationRecord base, Fill&& fill) {
        Clock::time_point start = Clock::now();
        try {
            fill(base);
        } catch (const BudgetError& e) {
            base.error = e.what();
            base.holds = false;
        } catch (const InconsistencyError& e) {
            base.error = e.what();
            base.holds = false;
        }
        if (opt.timings)
            base.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  Clock::now() - start)
                                  .count();
        rows.push_back(std::move(base));
    }

    int iota(const Graph& g, const FamilySpec& fam) const {
        Budget budget(opt.budget_limit);
        SolveOptions so;
        so.guard_n = opt.solver_guard;
        so.maximal_candidates = true;
        return iota_exact(g, fam, budget, so).size;
    }

    int nmin_or(int fallback) const { return opt.nmin > 0 ? opt.nmin : fallback; }
    int nmax_or(int fallback) const { return opt.nmax > 0 ? opt.nmax : fallback; }
    std::vector<int> ks_or(std::vector<int> fallback) const {
        return opt.ks.empty() ? fallback : opt.ks;
    }
};

int family_param(const FamilySpec& fam) {
    return fam.kind == FamilyKind::Union ? fam.members.front().param : fam.param;
}

// ---- deterministic random instances -----------------------------------

Graph random_connected(std::mt19937_64& rng, int n) {
    Graph g(n);
    int percent = 20 + int(rng() % 60);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (int(rng() % 100) < percent) g.add_edge(i, j);
    while (true) {
        std::vector<InducedSubgraph> comps = components(g);
        if (comps.size() <= 1) break;
        const std::vector<int>& a = comps[0].labels;
        const std::vector<int>& b = comps[1].labels;
        g.add_edge(a[rng() % a.size()], b[rng() % b.size()]);
    }
    return g;
}

std::vector<FamilySpec> rotation() {
    return {family_star(2), family_star(3), family_clique(3), family_all_cycles(),
            family_F01(3)};
}

// ---- claim campaigns ---------------------------------------------------

void claim_t1(Campaign& c) {
    for (int n = c.nmin_or(1); n <= c.nmax_or(7); ++n)
        for (const Graph& g : enumerate_connected(n))
            for (int k : c.ks_or({1, 2, 3, 4}))
                c.row({.claim = "T1", .graph6 = to_graph6(g), .n = n, .k = k,
                       .family = family_to_string(family_clique(k))},
                      [&](VerificationRecord& r) {
                          r.special = is_special_pair(g, k).special;
                          r.value = c.iota(g, family_clique(k));
                          r.bound = n / (k + 1);
                          r.holds = r.special || r.value <= r.bound;
                      });
}

void claim_t2(Campaign& c) {
    for (int n = c.nmin_or(1); n <= c.nmax_or(7); ++n)
        for (const Graph& g : enumerate_connected(n))
            c.row({.claim = "T2", .graph6 = to_graph6(g), .n = n, .k = 0,
                   .family = family_to_string(family_all_cycles())},
                  [&](VerificationRecord& r) {
                      r.special = n == 3 && is_complete(g);
                      r.value = c.iota(g, family_all_cycles());
                      r.bound = n / 4;
                      r.holds = r.special || r.value <= r.bound;
                  });
}

void claim_t3(Campaign& c) {
    for (int n = c.nmin_or(1); n <= c.nmax_or(6); ++n)
        for (const Graph& g : enumerate_all(n))
            for (int k : c.ks_or({1, 2, 3, 4}))
                c.row({.claim = "T3", .graph6 = to_graph6(g), .n = n, .k = k,
                       .family = family_to_string(family_star(k))},
                      [&](VerificationRecord& r) {
                          r.value = c.iota(g, family_star(k));
                          r.bound = n / (k + 1);
                          r.holds = r.value <= r.bound;
                      });
}

void claim_t4(Campaign& c) {
    for (int n = c.nmin_or(1); n <= c.nmax_or(7); ++n)
        for (const Graph& g : enumerate_connected(n))
            for (int k : c.ks_or({3, 4, 5}))
                c.row({.claim = "T4", .graph6 = to_graph6(g), .n = n, .k = k,
                       .family = family_to_string(family_F01(k))},
                      [&](VerificationRecord& r) {
                          r.special = is_special_pair(g, k).special;
                          r.value = c.iota(g, family_F01(k));
                          r.bound = n / (k + 1);
                          r.holds = r.special || r.value <= r.bound;
                      });
}

void claim_t4c(Campaign& c) {
    for (int n = c.nmin_or(1); n <= c.nmax_or(7); ++n)
        for (const Graph& g : enumerate_connected(n))
            for (int k : c.ks_or({3, 4, 5}))
                c.row({.claim = "T4C", .graph6 = to_graph6(g), .n = n, .k = k,
                       .family = family_to_string(family_F01(k))},
                      [&](VerificationRecord& r) {
                          r.bound = n / (k + 1);
                          r.special = is_special_pair(g, k).special;
                          if (r.special) {  // rejected by design; exempt
                              r.holds = true;
                              return;
                          }
                          Budget budget(c.opt.budget_limit);
                          BoundResult br = construct_isolating_set(
                              g, k, budget, c.opt.solver_guard);
                          r.value = br.size;
                          r.holds = r.value <= r.bound &&
                                    !is_isolating_set(g, family_F01(k), br.set, budget)
                                         .has_value();
                      });
}

void claim_t5(Campaign& c) {
    for (int k : c.ks_or({3, 4})) {
        int lo = k == 3 ? 8 : k == 4 ? 10 : k + 2;
        int hi = k == 3 ? 16 : k == 4 ? 15 : 4 * (k + 1);
        lo = c.nmin_or(lo);
        hi = c.nmax_or(hi);
        for (int n = lo; n <= hi; ++n) {
            Graph g = construction_B(n, k).graph;
            for (int i : {1, 2, 3}) {
                FamilySpec fam = i == 1 ? family_F1(k) : i == 2 ? family_F2(k)
                                                                : family_F3(k);
                c.row({.claim = "T5", .graph6 = to_graph6(g), .n = n, .k = k,
                       .family = family_to_string(fam)},
                      [&](VerificationRecord& r) {
                          r.value = c.iota(g, fam);
                          r.bound = n / (k + 1);
                          r.holds = r.value == r.bound;
                      });
            }
        }
    }
}

void claim_l5(Campaign& c) {
    std::mt19937_64 rng(c.opt.seed);
    std::vector<FamilySpec> fams = rotation();
    int samples = c.opt.samples > 0 ? c.opt.samples : 500;
    for (int s = 0; s < samples; ++s) {
        int n = 4 + int(rng() % 7);
        Graph g = random_connected(rng, n);
        const FamilySpec& fam = fams[s % fams.size()];

        // X: one or two vertices; Y: a random subset of N[X].
        std::set<int> xs{1 + int(rng() % n)};
        if (rng() % 2) xs.insert(1 + int(rng() % n));
        VertexSet x(xs.begin(), xs.end());
        std::uint64_t nx = closed_neighborhood_mask(g, mask_from_set(g, x));
        std::uint64_t y = 0;
        for (int u : set_from_mask(nx))
            if (rng() % 2) y |= std::uint64_t(1) << (u - 1);

        c.row({.claim = "L5", .graph6 = to_graph6(g), .n = n,
               .k = family_param(fam), .family = family_to_string(fam)},
              [&](VerificationRecord& r) {
                  r.value = c.iota(g, fam);
                  InducedSubgraph rest = induced_subgraph(g, g.full_mask() & ~y);
                  r.bound = int(x.size()) + c.iota(rest.graph, fam);
                  r.holds = r.value <= r.bound;
              });
    }
}

void claim_l6(Campaign& c) {
    std::mt19937_64 rng(c.opt.seed);
    std::vector<FamilySpec> fams = rotation();
    int samples = c.opt.samples > 0 ? c.opt.samples : 200;
    for (int s = 0; s < samples; ++s) {
        int n1 = 1 + int(rng() % 5), n2 = 1 + int(rng() % 5);
        Graph g1 = random_connected(rng, n1);
        Graph g2 = random_connected(rng, n2);
        Graph g(n1 + n2);
        for (int i = 1; i <= n1; ++i)
            for (int j : set_from_mask(g1.neighbors_mask(i)))
                if (i < j) g.add_edge(i, j);
        for (int i = 1; i <= n2; ++i)
            for (int j : set_from_mask(g2.neighbors_mask(i)))
                if (i < j) g.add_edge(n1 + i, n1 + j);
        const FamilySpec& fam = fams[s % fams.size()];
        c.row({.claim = "L6", .graph6 = to_graph6(g), .n = n1 + n2,
               .k = family_param(fam), .family = family_to_string(fam)},
              [&](VerificationRecord& r) {
                  r.value = c.iota(g, fam);
                  r.bound = c.iota(g1, fam) + c.iota(g2, fam);
                  r.holds = r.value == r.bound;
              });
    }
}

void claim_l7(Campaign& c) {
    for (int k : c.ks_or({2, 3})) {
        int lo = std::max(c.nmin_or(2 * k + 3), 2 * k + 3);
        int hi = c.nmax_or(k == 2 ? 21 : 18);
        for (int n = lo; n <= hi; ++n) {
            Graph g = construction_BnCk(n, k).graph;
            c.row({.claim = "L7", .graph6 = to_graph6(g), .n = n, .k = k,
                   .family = family_to_string(family_star(k))},
                  [&](VerificationRecord& r) {
                      r.value = c.iota(g, family_star(k));
                      r.bound = 2 * n / (2 * k + 3);
                      r.holds = r.value == r.bound;
                  });
        }
    }
}

void claim_l9(Campaign& c) {
    for (int n : {11, 12, 13, 22}) {
        if (c.opt.nmin > 0 && n < c.opt.nmin) continue;
        if (c.opt.nmax > 0 && n > c.opt.nmax) continue;
        Graph g = construction_BnCk_prime(n, 4).graph;
        c.row({.claim = "L9", .graph6 = to_graph6(g), .n = n, .k = 4,
               .family = family_to_string(family_cycle(5))},
              [&](VerificationRecord& r) {
                  r.value = c.iota(g, family_cycle(5));
                  r.bound = 2 * n / 11;
                  r.holds = r.value == r.bound;
              });
    }
}

// Shared shape of the two gadget claims: the isolation number is exactly 2,
// no single vertex isolates, and every {i, j_i} with j_i = (i+k+1) mod* (2k+2)
// dominates.
void gadget_rows(Campaign& c, const std::string& claim, const FamilySpec& fam,
                 int k) {
    Graph g = gadget_C(k);
    const int n = 2 * k + 2;
    c.row({.claim = claim, .graph6 = to_graph6(g), .n = n, .k = k,
           .family = family_to_string(fam)},
          [&](VerificationRecord& r) {
              r.value = c.iota(g, fam);
              r.bound = 2;
              bool vertex_checks = true;
              for (int i = 1; i <= n && vertex_checks; ++i) {
                  int j = mod_star(i + k + 1, n);
                  Budget budget(c.opt.budget_limit);
                  vertex_checks =
                      is_isolating_set(g, fam, {i}, budget).has_value() &&
                      closed_neighborhood_mask(
                          g, mask_from_set(g, {std::min(i, j), std::max(i, j)})) ==
                          g.full_mask();
              }
              r.holds = r.value == r.bound && vertex_checks;
          });
}

void claim_eck_star(Campaign& c) {
    for (int k : c.ks_or({2, 3, 4, 5, 6}))
        gadget_rows(c, "E-Ck-star", family_star(k), k);
}

void claim_eck_cycle(Campaign& c) {
    for (int k : c.ks_or({4, 5}))
        gadget_rows(c, "E-Ck-cycle", family_cycle(k + 1), k);
}

void claim_brooks(Campaign& c) {
    for (int n = c.nmin_or(1); n <= c.nmax_or(7); ++n)
        for (const Graph& g : enumerate_connected(n))
            c.row({.claim = "Brooks", .graph6 = to_graph6(g), .n = n, .k = 0,
                   .family = "chromatic"},
                  [&](VerificationRecord& r) {
                      Budget budget(c.opt.budget_limit);
                      r.value = chromatic_number(g, budget);
                      r.bound = max_degree(g);
                      r.special = is_complete(g) ||
                                  (n >= 3 && n % 2 == 1 &&
                                   is_regular(g) == std::optional<int>(2));
                      r.holds = r.value <= r.bound + 1 &&
                                (r.special || r.value <= r.bound);
                  });
}

void claim_p8(Campaign& c) {
    for (int k : c.ks_or({2, 3}))
        for (int r_mult : {1, 2}) {
            int n = r_mult * (2 * k + 3);
            Graph g = construction_BnCk(n, k).graph;
            c.row({.claim = "P8", .graph6 = to_graph6(g), .n = n, .k = k,
                   .family = family_to_string(family_star(k))},
                  [&](VerificationRecord& r) {
                      r.value = c.iota(g, family_star(k));
                      r.bound = 2 * r_mult;
                      r.holds = r.value == r.bound;
                  });
        }
}

void claim_p10(Campaign& c) {
    for (int r_mult : {1, 2}) {
        int n = 11 * r_mult;
        Graph g = construction_BnCk_prime(n, 4).graph;
        c.row({.claim = "P10", .graph6 = to_graph6(g), .n = n, .k = 4,
               .family = family_to_string(family_cycle(5))},
              [&](VerificationRecord& r) {
                  r.value = c.iota(g, family_cycle(5));
                  r.bound = 2 * r_mult;
                  r.holds = r.value == r.bound;
              });
    }
}

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{
        "T1", "T2", "T3", "T4", "T4C", "T5", "L5", "L6", "L7", "L9",
        "E-Ck-star", "E-Ck-cycle", "Brooks", "P8", "P10"};
    return ids;
}

std::vector<VerificationRecord> verify_claim(const std::string& claim,
                                             const CampaignOptions& options) {
    Campaign c{options, {}};
    if (claim == "T1") claim_t1(c);
    else if (claim == "T2") claim_t2(c);
    else if (claim == "T3") claim_t3(c);
    else if (claim == "T4") claim_t4(c);
    else if (claim == "T4C") claim_t4c(c);
    else if (claim == "T5") claim_t5(c);
    else if (claim == "L5") claim_l5(c);
    else if (claim == "L6") claim_l6(c);
    else if (claim == "L7") claim_l7(c);
    else if (claim == "L9") claim_l9(c);
    else if (claim == "E-Ck-star") claim_eck_star(c);
    else if (claim == "E-Ck-cycle") claim_eck_cycle(c);
    else if (claim == "Brooks") claim_brooks(c);
    else if (claim == "P8") claim_p8(c);
    else if (claim == "P10") claim_p10(c);
    else throw std::invalid_argument("unknown claim: " + claim);
    sort_rows(c.rows);
    return c.rows;
}

std::vector<SurveyRecord> survey(const FamilySpec& family, int n_min, int n_max,
                                 const CampaignOptions& options) {
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("bad order range for survey");
    Campaign c{options, {}};
    std::vector<SurveyRecord> out;
    for (int n = n_min; n <= n_max; ++n) {
        SurveyRecord rec;
        rec.family = family_to_string(family);
        rec.n = n;
        int best = -1;
        std::vector<std::string> argmax;
        for (const Graph& g : enumerate_connected(n)) {
            int value = c.iota(g, family);
            if (value > best) {
                best = value;
                argmax.clear();
            }
            if (value == best) argmax.push_back(canonical_graph6(g));
        }
        rec.max_iota = best;
        rec.ratio = Fraction(best, n);
        std::sort(argmax.begin(), argmax.end());
        rec.argmax = std::move(argmax);
        if (family.kind == FamilyKind::Star && family.param >= 2)
            rec.exceeds = Fraction(2, 2 * family.param + 3) < rec.ratio;
        else if (family.kind == FamilyKind::CycleLen && family.param >= 5)
            rec.exceeds = Fraction(2, 2 * family.param + 1) < rec.ratio;
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string verification_csv(const std::vector<VerificationRecord>& rows,
                             bool timings) {
    std::string out = "claim,graph6,n,k,family,value,bound,holds,special,error";
    if (timings) out += ",runtime_ms";
    out += '\n';
    for (const VerificationRecord& r : rows) {
        out += r.claim + ',' + r.graph6 + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.k) + ',' + csv_escape(r.family) + ',' +
               std::to_string(r.value) + ',' + std::to_string(r.bound) + ',' +
               bool_str(r.holds) + ',' + bool_str(r.special) + ',' +
               csv_escape(r.error);
        if (timings) out += ',' + std::to_string(r.runtime_ms);
        out += '\n';
    }
    return out;
}

std::string verification_json(const std::vector<VerificationRecord>& rows,
                              bool timings) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationRecord& r : rows) {
        nlohmann::ordered_json row;
        row["claim"] = r.claim;
        row["graph6"] = r.graph6;
        row["n"] = r.n;
        row["k"] = r.k;
        row["family"] = r.family;
        row["value"] = r.value;
        row["bound"] = r.bound;
        row["holds"] = r.holds;
        row["special"] = r.special;
        row["error"] = r.error;
        if (timings) row["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

std::string survey_csv(const std::vector<SurveyRecord>& rows) {
    std::string out = "family,n,max_iota,ratio,exceeds,argmax\n";
    for (const SurveyRecord& r : rows) {
        std::string list;
        for (const std::string& g6 : r.argmax) {
            if (!list.empty()) list += ' ';
            list += g6;
        }
        out += csv_escape(r.family) + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.max_iota) + ',' + r.ratio.str() + ',' +
               bool_str(r.exceeds) + ',' + csv_escape(list) + '\n';
    }
    return out;
}

std::string survey_json(const std::vector<SurveyRecord>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SurveyRecord& r : rows) {
        nlohmann::ordered_json row;
        row["family"] = r.family;
        row["n"] = r.n;
        row["max_iota"] = r.max_iota;
        row["ratio"] = r.ratio.str();
        row["exceeds"] = r.exceeds;
        row["argmax"] = r.argmax;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed while writing " + path);
}

}  // namespace iso
