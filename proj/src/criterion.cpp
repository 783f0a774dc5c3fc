#include "latpic/criterion.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latpic {

const char* const kNondegeneracyAssumption =
    "verdict assumes a nondegenerate member of the family; degenerate members "
    "are outside the scope of this test";
const char* const kOneDirectionalNote =
    "the test is one-directional: a nonpositive margin does not certify that "
    "the Picard number equals 1";
const char* const kRetryHint = "retry with a larger fine-interior bound";

HypothesisReport check_hypotheses(const Simplex3& s, std::optional<long long> fine_bound) {
    HypothesisReport r;
    r.l_star_delta = l_star(s);
    r.fine_dim = dim_certificate(fine_interior(s, fine_bound));
    for (const auto& [i, j] : simplex_edges()) {
        const Int le = l_star(make_face(s, {i, j}));
        if (le > 0) r.edges_with_interior.emplace_back(std::make_pair(i, j), le);
    }

    if (r.l_star_delta == 0) r.reasons.push_back("no interior lattice points");
    if (!r.fine_dim.is_certified) {
        r.reasons.push_back("fine interior dimension not certified");
    } else if (r.fine_dim.dim != 2 && r.fine_dim.dim != 3) {
        r.reasons.push_back("fine interior dimension " + std::to_string(r.fine_dim.dim) +
                            " not in {2,3}");
    }
    if (r.edges_with_interior.empty())
        r.reasons.push_back("no edge has interior lattice points");
    r.all_hold = r.reasons.empty();
    return r;
}

InequalityResult evaluate_inequality(const std::vector<Int>& piece_lstars,
                                     const std::vector<Int>& cut_lstars) {
    const Int pieces = std::accumulate(piece_lstars.begin(), piece_lstars.end(), Int(0));
    const Int cuts = std::accumulate(cut_lstars.begin(), cut_lstars.end(), Int(0));
    return {cuts > pieces, cuts - pieces};
}

HodgeBudget hodge_budget(const EdgeSubdivision& sub) {
    HodgeBudget b;
    b.p_g = l_star(sub.parent);
    for (const auto& p : sub.pieces) b.piece_pg.push_back(l_star(p));
    for (const auto& c : sub.cuts) b.cut_genera.push_back(l_star(c));
    const Int pieces = std::accumulate(b.piece_pg.begin(), b.piece_pg.end(), Int(0));
    const Int cuts = std::accumulate(b.cut_genera.begin(), b.cut_genera.end(), Int(0));
    if (b.p_g != pieces + cuts)
        throw std::invalid_argument("subdivision violates the interior-point count identity");
    b.vanishing_dim = 2 * cuts;
    b.margin = cuts - pieces;
    return b;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PicardGreaterOne: return "PicardGreaterOne";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::HypothesisFailed: return "HypothesisFailed";
    }
    throw std::logic_error("unknown verdict");
}

namespace {

std::string describe_failure(const SubdivisionValidation& val) {
    std::ostringstream out;
    const char* sep = "";
    if (!val.volume_ok) {
        out << sep << "piece volumes do not add up to the parent volume";
        sep = "; ";
    }
    if (!val.structure_ok) {
        out << sep << "pieces and cuts do not chain along the subdivided edge";
        sep = "; ";
    }
    if (!val.violations.empty()) {
        out << sep << "subdivision places " << val.violations.size()
            << " interior lattice point(s) on piece edges";
        sep = "; ";
    }
    if (!val.identity.holds) out << sep << "interior-point count identity fails";
    return out.str();
}

} // namespace

Decision decide(const Simplex3& s, std::optional<long long> fine_bound) {
    Decision d;
    d.hypotheses = check_hypotheses(s, fine_bound);
    if (!d.hypotheses.all_hold) {
        d.verdict = Verdict::HypothesisFailed;
        if (!d.hypotheses.fine_dim.is_certified) d.note = kRetryHint;
        return d;
    }

    for (const auto& [edge, le] : d.hypotheses.edges_with_interior) {
        EdgeEvaluation ev;
        ev.edge = edge;
        ev.edge_lstar = le;
        const auto sub = subdivide_along_edge(s, make_face(s, {edge.first, edge.second}));
        const auto val = validate_subdivision(sub);
        if (val.ok) {
            ev.validated = true;
            ev.budget = hodge_budget(sub);
        } else {
            ev.failure = describe_failure(val);
        }
        d.per_edge.push_back(std::move(ev));
    }

    // Edges are visited in index order, so with a strict comparison the first
    // maximum is automatically the lowest vertex-index pair among ties.
    const EdgeEvaluation* best = nullptr;
    for (const auto& ev : d.per_edge)
        if (ev.validated && (best == nullptr || ev.budget->margin > best->budget->margin))
            best = &ev;

    if (best != nullptr) d.best_margin = best->budget->margin;
    if (best != nullptr && best->budget->margin > 0) {
        if (!best->validated || !best->budget || best->budget->margin <= 0)
            throw std::logic_error("positive verdict without a validated positive margin");
        d.verdict = Verdict::PicardGreaterOne;
        d.witness_edge = best->edge;
        d.budget = best->budget;
        d.assumption = kNondegeneracyAssumption;
    } else {
        d.verdict = Verdict::Inconclusive;
        d.note = kOneDirectionalNote;
    }
    return d;
}

} // namespace latpic
