#pragma once

#include "iso/family.hpp"
#include "iso/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace iso {

// Exact rational, normalized with positive denominator.
struct Fraction {
    long long num = 0;
    long long den = 1;
    Fraction() = default;
    Fraction(long long p, long long q);
    std::string str() const;  // always "p/q"
    friend bool operator==(const Fraction&, const Fraction&) = default;
};
bool operator<(const Fraction& a, const Fraction& b);

// One checked instance of a claim.  `value` is the quantity the claim bounds
// or pins (an isolation number, a constructed set size, or a chromatic
// number); `bound` is what it is compared against.  Rows that died on a
// budget carry the message in `error` and holds = false.
struct VerificationRecord {
    std::string claim;
    std::string graph6;
    int n = 0;
    int k = 0;
    std::string family;
    int value = -1;
    int bound = -1;
    bool holds = false;
    bool special = false;
    std::string error;
    std::int64_t runtime_ms = 0;  // populated only when timings are enabled
};

// Extremal ratio of one family at one order: the largest isolation number
// over all connected n-vertex graphs, with every graph attaining it.
struct SurveyRecord {
    std::string family;
    int n = 0;
    int max_iota = 0;
    Fraction ratio;                   // max_iota / n
    std::vector<std::string> argmax;  // canonical graph6, sorted
    bool exceeds = false;  // ratio beyond the conjectured asymptotic constant
};

struct CampaignOptions {
    int nmin = 0;                  // 0 = claim default
    int nmax = 0;                  // 0 = claim default
    std::vector<int> ks;           // empty = claim default
    int samples = 0;               // randomized claims; 0 = claim default
    std::uint64_t seed = 2026;
    std::uint64_t budget_limit = 100'000'000;  // per row
    int solver_guard = 26;
    bool timings = false;
};

// Recognized claim identifiers, in report order.
const std::vector<std::string>& claim_ids();

// Runs one claim campaign; rows come back sorted by (claim, n, k, graph6,
// family).  Unknown identifiers raise std::invalid_argument; per-row budget
// exhaustion is recorded, never thrown.
std::vector<VerificationRecord> verify_claim(const std::string& claim,
                                             const CampaignOptions& options = {});

// Exact extremal ratios over all connected graphs of each order in range.
std::vector<SurveyRecord> survey(const FamilySpec& family, int n_min, int n_max,
                                 const CampaignOptions& options = {});

// Serializers; identical input yields identical bytes.  Timing columns are
// emitted only on request so that default reports stay reproducible.
std::string verification_csv(const std::vector<VerificationRecord>& rows,
                             bool timings = false);
std::string verification_json(const std::vector<VerificationRecord>& rows,
                              bool timings = false);
std::string survey_csv(const std::vector<SurveyRecord>& rows);
std::string survey_json(const std::vector<SurveyRecord>& rows);

// Writes content to path, reporting failures with the path in the message.
void write_file(const std::string& path, const std::string& content);

}  // namespace iso
