#pragma once

#include "latpic/io.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace latpic {

enum class DegreeMode { AnticanonicalOnly, DivisorsUpTo };

struct WeightCandidate {
    std::array<Int, 4> q;
    Int degree;
};

// Candidates in lexicographic order q0 <= q1 <= q2 <= q3 <= q_max with
// overall gcd 1. AnticanonicalOnly keeps quadruples whose sum every weight
// divides, at degree = sum. DivisorsUpTo emits every common multiple of the
// weights up to the cap, ascending, so one quadruple can appear at several
// degrees.
std::vector<WeightCandidate> enumerate_weight_systems(long long q_max, DegreeMode mode,
                                                      const Int& divisor_cap = 0);

struct SearchSpec {
    enum class Source { Weights, Simplices };
    Source source = Source::Weights;
    long long q_max = 1;
    DegreeMode degree_mode = DegreeMode::AnticanonicalOnly;
    Int divisor_cap = 0;                     // DivisorsUpTo only
    std::vector<io::SimplexInput> simplices; // Source::Simplices only
    std::optional<long long> fine_bound;
    int parallelism = 1;
};

struct SearchSummary {
    long long total = 0;
    long long positive = 0;
    long long inconclusive = 0;
    long long failed = 0;

    friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};
std::string to_string(const SearchSummary& s);

// Runs decide on every candidate and hands finished records to emit strictly
// in input order, whatever the worker completion order. Workers share nothing
// mutable; positive verdicts get an independent recount before emission.
SearchSummary run_search(const SearchSpec& spec,
                         const std::function<void(const io::CatalogRecord&)>& emit);

// Second pass for a positive verdict: rebuild the witness subdivision and
// recount every interior-point tally from scratch, then compare the sums,
// the margin, and the budget lists.
bool reverify_positive(const Simplex3& s, const Decision& d);

} // namespace latpic
