#include "latpic/search.hpp"

#include "latpic/subdivision.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace latpic {

namespace {

Int lcm4(const std::array<Int, 4>& q) {
    Int l = 1;
    for (const auto& e : q) l = lcm(l, e);
    return l;
}

struct Task {
    std::string id;
    Simplex3 simplex;
    std::optional<Int> degree;
};

std::string weight_id(const WeightCandidate& c) {
    std::ostringstream os;
    os << "q" << c.q[0] << "-" << c.q[1] << "-" << c.q[2] << "-" << c.q[3] << "-d" << c.degree;
    return os.str();
}

io::CatalogRecord process(const Task& task, const std::optional<long long>& fine_bound) {
    const auto t0 = std::chrono::steady_clock::now();
    io::CatalogRecord rec;
    rec.id = task.id;
    rec.simplex = task.simplex;
    rec.degree = task.degree;
    rec.weights = weights_from_simplex(task.simplex);
    rec.decision = decide(task.simplex, fine_bound);
    if (rec.decision.verdict == Verdict::PicardGreaterOne)
        rec.reverified = reverify_positive(task.simplex, rec.decision);
    const auto t1 = std::chrono::steady_clock::now();
    rec.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rec;
}

} // namespace

std::vector<WeightCandidate> enumerate_weight_systems(long long q_max, DegreeMode mode,
                                                      const Int& divisor_cap) {
    if (q_max < 1) throw std::invalid_argument("q_max must be at least 1");
    if (mode == DegreeMode::DivisorsUpTo && divisor_cap < 1)
        throw std::invalid_argument("degree cap must be at least 1");
    std::vector<WeightCandidate> out;
    for (long long q0 = 1; q0 <= q_max; ++q0)
        for (long long q1 = q0; q1 <= q_max; ++q1)
            for (long long q2 = q1; q2 <= q_max; ++q2)
                for (long long q3 = q2; q3 <= q_max; ++q3) {
                    if (std::gcd(std::gcd(q0, q1), std::gcd(q2, q3)) != 1) continue;
                    const std::array<Int, 4> q = {q0, q1, q2, q3};
                    if (mode == DegreeMode::AnticanonicalOnly) {
                        const Int d = q0 + q1 + q2 + q3;
                        if (d % q0 || d % q1 || d % q2 || d % q3) continue;
                        out.push_back({q, d});
                    } else {
                        const Int step = lcm4(q);
                        for (Int d = step; d <= divisor_cap; d += step) out.push_back({q, d});
                    }
                }
    return out;
}

std::string to_string(const SearchSummary& s) {
    std::ostringstream os;
    os << "candidates: " << s.total << " | PicardGreaterOne: " << s.positive
       << " | Inconclusive: " << s.inconclusive << " | HypothesisFailed: " << s.failed;
    return os.str();
}

bool reverify_positive(const Simplex3& s, const Decision& d) {
    if (!d.witness_edge || !d.budget) return false;
    const auto sub =
        subdivide_along_edge(s, make_face(s, {d.witness_edge->first, d.witness_edge->second}));

    const Int parent = Int(interior_lattice_points(s).size());
    std::vector<Int> piece_counts, cut_counts;
    Int pieces_sum = 0, cuts_sum = 0;
    for (const auto& p : sub.pieces) {
        piece_counts.emplace_back(interior_lattice_points(p).size());
        pieces_sum += piece_counts.back();
    }
    for (const auto& c : sub.cuts) {
        cut_counts.emplace_back(interior_lattice_points(c).size());
        cuts_sum += cut_counts.back();
    }

    const HodgeBudget& b = *d.budget;
    return parent == pieces_sum + cuts_sum && parent == b.p_g && piece_counts == b.piece_pg &&
           cut_counts == b.cut_genera && cuts_sum - pieces_sum == b.margin &&
           Int(2) * cuts_sum == b.vanishing_dim && b.margin > 0;
}

SearchSummary run_search(const SearchSpec& spec,
                         const std::function<void(const io::CatalogRecord&)>& emit) {
    if (spec.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");

    std::vector<Task> tasks;
    if (spec.source == SearchSpec::Source::Weights) {
        for (const auto& c : enumerate_weight_systems(spec.q_max, spec.degree_mode, spec.divisor_cap))
            tasks.push_back({weight_id(c), simplex_from_weights(c.q, c.degree), c.degree});
    } else {
        for (const auto& in : spec.simplices) tasks.push_back({in.id, in.simplex, std::nullopt});
    }

    SearchSummary summary;
    auto tally_and_emit = [&](const io::CatalogRecord& rec) {
        ++summary.total;
        switch (rec.decision.verdict) {
            case Verdict::PicardGreaterOne: ++summary.positive; break;
            case Verdict::Inconclusive: ++summary.inconclusive; break;
            case Verdict::HypothesisFailed: ++summary.failed; break;
        }
        emit(rec);
    };

    if (spec.parallelism == 1) {
        for (const auto& t : tasks) tally_and_emit(process(t, spec.fine_bound));
        return summary;
    }

    // Worker pool plus a sequencer: records become visible strictly in input
    // order, whatever order the workers finish in.
    const std::size_t n = tasks.size();
    std::vector<std::optional<io::CatalogRecord>> done(n);
    std::vector<std::exception_ptr> errors(n);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            std::optional<io::CatalogRecord> rec;
            std::exception_ptr err;
            try {
                rec = process(tasks[i], spec.fine_bound);
            } catch (...) {
                err = std::current_exception();
                rec.emplace(); // placeholder so the sequencer wakes up
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                done[i] = std::move(rec);
                errors[i] = err;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int j = 0; j < spec.parallelism; ++j) pool.emplace_back(work);

    std::exception_ptr first_error;
    for (std::size_t emitted = 0; emitted < n; ++emitted) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return done[emitted].has_value(); });
        io::CatalogRecord rec = std::move(*done[emitted]);
        std::exception_ptr err = errors[emitted];
        done[emitted].reset();
        lock.unlock();
        if (err) {
            first_error = err;
            break;
        }
        tally_and_emit(rec);
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return summary;
}

} // namespace latpic
