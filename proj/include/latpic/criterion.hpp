#pragma once

#include "latpic/fine_interior.hpp"
#include "latpic/subdivision.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latpic {

// Structural hypotheses for the positivity test: the simplex has interior
// lattice points, the shrunk-region dimension is certified and lies in {2,3},
// and some edge has interior lattice points.
struct HypothesisReport {
    Int l_star_delta = 0;
    DimCertificate fine_dim;
    std::vector<std::pair<std::pair<int, int>, Int>> edges_with_interior; // (edge, l*(edge))
    bool all_hold = false;
    std::vector<std::string> reasons; // populated when all_hold is false
};
HypothesisReport check_hypotheses(const Simplex3& s,
                                  std::optional<long long> fine_bound = std::nullopt);

// The decisive inequality: the cut counts must strictly exceed the piece counts.
struct InequalityResult {
    bool holds = false;
    Int margin = 0; // sum(cut_lstars) - sum(piece_lstars)
};
InequalityResult evaluate_inequality(const std::vector<Int>& piece_lstars,
                                     const std::vector<Int>& cut_lstars);

// Interior-point bookkeeping of one subdivision, read as Hodge-type budgets:
// total geometric genus, per-piece genera, double-curve genera on the cuts,
// and the count of independent vanishing classes they span.
struct HodgeBudget {
    Int p_g = 0;                 // l*(parent)
    std::vector<Int> piece_pg;   // per-piece l*
    std::vector<Int> cut_genera; // per-cut l*
    Int vanishing_dim = 0;       // 2 * sum(cut_genera), even and nonnegative
    Int margin = 0;              // sum(cut_genera) - sum(piece_pg)
};
// Throws std::invalid_argument("subdivision violates the interior-point count
// identity") when the counts do not add up; budgets from broken subdivisions
// are meaningless.
HodgeBudget hodge_budget(const EdgeSubdivision& sub);

enum class Verdict { PicardGreaterOne, Inconclusive, HypothesisFailed };
std::string to_string(Verdict v);

struct EdgeEvaluation {
    std::pair<int, int> edge;
    Int edge_lstar = 0;
    bool validated = false;            // subdivision passed every validation layer
    std::string failure;               // reason when not validated
    std::optional<HodgeBudget> budget; // present when validated
};

struct Decision {
    Verdict verdict = Verdict::HypothesisFailed;
    HypothesisReport hypotheses;
    std::vector<EdgeEvaluation> per_edge;            // edges with l* > 0, in index order
    std::optional<std::pair<int, int>> witness_edge; // positive verdicts only
    std::optional<HodgeBudget> budget;               // positive verdicts only
    std::optional<Int> best_margin;                  // when any edge validated
    std::string assumption; // nondegeneracy scoping, set on positive verdicts
    std::string note;       // one-directionality text / retry hint
};
// Evaluates every candidate edge via its maximal subdivision and aggregates:
// positive when some validated edge has positive margin (witness = max margin,
// ties broken by the lowest vertex-index pair), inconclusive otherwise, and
// hypothesis failure short-circuits.
Decision decide(const Simplex3& s, std::optional<long long> fine_bound = std::nullopt);

// Fixed report wording, shared with serialization and tests.
extern const char* const kNondegeneracyAssumption;
extern const char* const kOneDirectionalNote;
extern const char* const kRetryHint;

} // namespace latpic
