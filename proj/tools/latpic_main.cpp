#include "latpic/fine_interior.hpp"
#include "latpic/io.hpp"
#include "latpic/search.hpp"
#include "latpic/subdivision.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latpic;

constexpr int kExitPositive = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitHypothesisFailed = 2;
constexpr int kExitInputError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

io::SimplexInput load_single_simplex(const std::string& path) {
    auto records = io::parse_simplex_file(slurp(path), path);
    if (records.size() != 1)
        throw InputError(path + ": holds " + std::to_string(records.size()) +
                         " simplex records; expected exactly one");
    return records[0];
}

std::string fmt_point(const LatticeVector& v) {
    std::ostringstream os;
    os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
    return os.str();
}

std::string fmt_point(const RationalVector& v) {
    std::ostringstream os;
    os << "(" << v.x << "," << v.y << "," << v.z << ")";
    return os.str();
}

std::string fmt_vertices(const Simplex3& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < 4; ++i) os << (i ? " " : "") << fmt_point(s.v[i]);
    return os.str();
}

std::string weights_line(const WeightSystem& w) {
    std::ostringstream os;
    os << "(" << w.weights[0] << "," << w.weights[1] << "," << w.weights[2] << ","
       << w.weights[3] << "), multiplicity " << w.multiplicity << ", "
       << (w.multiplicity == 1 ? "genuine" : "fake");
    if (!w.well_formed) os << ", not well-formed";
    return os.str();
}

std::string fine_interior_line(const FineInteriorResult& r) {
    std::ostringstream os;
    const auto cert = dim_certificate(r);
    if (cert.is_certified)
        os << "dim " << cert.dim << " (certified)";
    else
        os << "dim " << cert.lo << ".." << cert.hi << " (uncertain)";
    os << ", vertices:";
    if (r.vertices.empty()) os << " none";
    for (const auto& v : r.vertices) os << " " << fmt_point(v);
    return os.str();
}

// Shared sink: stdout by default, a file when --out is given.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InputError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void print_check_text(std::ostream& os, const io::CatalogRecord& rec) {
    os << "simplex: " << fmt_vertices(rec.simplex) << "\n";
    os << "weights: " << weights_line(rec.weights) << "\n";
    const Decision& d = rec.decision;
    os << "interior lattice points: " << d.hypotheses.l_star_delta << "\n";
    os << "fine interior: " << to_string(d.hypotheses.fine_dim) << "\n";
    if (d.hypotheses.all_hold) {
        os << "hypotheses: hold\n";
    } else {
        os << "hypotheses: fail\n";
        for (const auto& r : d.hypotheses.reasons) os << "  - " << r << "\n";
    }
    if (!d.hypotheses.edges_with_interior.empty()) {
        os << "edges with interior points:\n";
        for (const auto& [e, l] : d.hypotheses.edges_with_interior)
            os << "  edge (" << e.first << "," << e.second << "): l* = " << l << "\n";
    }
    if (!d.per_edge.empty()) {
        os << "per-edge evaluation:\n";
        for (const auto& ev : d.per_edge) {
            os << "  edge (" << ev.edge.first << "," << ev.edge.second << "): ";
            if (ev.validated && ev.budget)
                os << "margin " << ev.budget->margin;
            else
                os << "invalid: " << ev.failure;
            os << "\n";
        }
    }
    os << "verdict: " << to_string(d.verdict) << "\n";
    if (d.witness_edge && d.budget)
        os << "witness edge: (" << d.witness_edge->first << "," << d.witness_edge->second
           << "), margin " << d.budget->margin << ", p_g " << d.budget->p_g
           << ", vanishing_dim " << d.budget->vanishing_dim << "\n";
    else if (d.best_margin)
        os << "best margin: " << *d.best_margin << "\n";
    if (!d.assumption.empty()) os << "assumption: " << d.assumption << "\n";
    if (!d.note.empty()) os << "note: " << d.note << "\n";
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::PicardGreaterOne: return kExitPositive;
        case Verdict::Inconclusive: return kExitInconclusive;
        case Verdict::HypothesisFailed: return kExitHypothesisFailed;
    }
    return kExitInputError;
}

struct DegreeModeFlag {
    DegreeMode mode = DegreeMode::AnticanonicalOnly;
    Int cap = 0;
};

DegreeModeFlag parse_degree_mode(const std::string& text) {
    if (text == "anticanonical") return {};
    if (text.rfind("divisors:", 0) == 0) {
        const std::string cap = text.substr(9);
        if (cap.empty() || cap.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("--degree-mode divisors needs a positive integer cap, got \"" +
                             text + "\"");
        DegreeModeFlag f;
        f.mode = DegreeMode::DivisorsUpTo;
        f.cap = Int(cap);
        if (f.cap < 1) throw InputError("--degree-mode divisors cap must be at least 1");
        return f;
    }
    throw InputError("--degree-mode must be \"anticanonical\" or \"divisors:D\", got \"" + text +
                     "\"");
}

int cmd_check(const std::string& path, std::optional<long long> fine_bound,
              const std::string& format, const std::string& out_path) {
    const auto input = load_single_simplex(path);
    io::CatalogRecord rec;
    rec.id = input.id;
    rec.simplex = input.simplex;
    rec.weights = weights_from_simplex(input.simplex);
    rec.decision = decide(input.simplex, fine_bound);
    if (rec.decision.verdict == Verdict::PicardGreaterOne)
        rec.reverified = reverify_positive(input.simplex, rec.decision);

    Output out(out_path);
    if (format == "machine") {
        out.stream() << io::to_json(rec).dump() << "\n";
    } else if (format == "csv") {
        out.stream() << io::kCsvHeader << "\n" << io::to_csv_row(rec) << "\n";
    } else {
        print_check_text(out.stream(), rec);
    }
    return verdict_exit_code(rec.decision.verdict);
}

int cmd_search(long long q_max, const std::string& degree_mode, const std::string& simplex_file,
               std::optional<long long> fine_bound, int jobs, const std::string& format,
               const std::string& out_path) {
    SearchSpec spec;
    spec.fine_bound = fine_bound;
    spec.parallelism = jobs;
    if (!simplex_file.empty()) {
        spec.source = SearchSpec::Source::Simplices;
        spec.simplices = io::parse_simplex_file(slurp(simplex_file), simplex_file);
    } else {
        const auto f = parse_degree_mode(degree_mode);
        spec.q_max = q_max;
        spec.degree_mode = f.mode;
        spec.divisor_cap = f.cap;
    }

    Output out(out_path);
    if (format == "csv") out.stream() << io::kCsvHeader << "\n";
    const auto summary = run_search(spec, [&](const io::CatalogRecord& rec) {
        if (format == "machine")
            out.stream() << io::to_json(rec).dump() << "\n";
        else if (format == "csv")
            out.stream() << io::to_csv_row(rec) << "\n";
        else
            out.stream() << rec.id << ": " << to_string(rec.decision.verdict)
                         << (rec.decision.best_margin
                                 ? " (margin " + rec.decision.best_margin->str() + ")"
                                 : "")
                         << "\n";
    });
    std::cerr << to_string(summary) << "\n";
    return 0;
}

int cmd_report(const std::string& path) {
    const std::string text = slurp(path);
    std::vector<io::ReportEntry> entries;
    std::vector<std::pair<int, std::string>> corrupt;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            entries.push_back(io::report_entry_from_json(io::Json::parse(line)));
        } catch (const io::Json::parse_error& e) {
            std::string msg = e.what();
            if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
            corrupt.emplace_back(lineno, msg);
        } catch (const io::ParseError& e) {
            corrupt.emplace_back(lineno, e.what());
        }
    }

    long long positive = 0, inconclusive = 0, failed = 0;
    std::map<Int, long long> margins;
    long long genuine = 0, fake = 0;
    std::vector<std::string> unverified;
    for (const auto& e : entries) {
        switch (e.verdict) {
            case Verdict::PicardGreaterOne: ++positive; break;
            case Verdict::Inconclusive: ++inconclusive; break;
            case Verdict::HypothesisFailed: ++failed; break;
        }
        if (e.margin) ++margins[*e.margin];
        (e.multiplicity == 1 ? genuine : fake) += 1;
        if (e.verdict == Verdict::PicardGreaterOne && !e.reverified) unverified.push_back(e.id);
    }

    std::cout << "records: " << entries.size();
    if (!corrupt.empty()) std::cout << " (" << corrupt.size() << " corrupt, skipped)";
    std::cout << "\n";
    for (const auto& [n, msg] : corrupt) std::cout << "  corrupt line " << n << ": " << msg << "\n";
    std::cout << "verdicts:\n";
    std::cout << "  PicardGreaterOne  " << positive << "\n";
    std::cout << "  Inconclusive      " << inconclusive << "\n";
    std::cout << "  HypothesisFailed  " << failed << "\n";
    std::cout << "margin histogram:\n";
    if (margins.empty()) std::cout << "  (empty)\n";
    for (const auto& [m, count] : margins) std::cout << "  " << m << "  " << count << "\n";
    std::cout << "multiplicity:\n";
    std::cout << "  genuine (m=1)  " << genuine << "\n";
    std::cout << "  fake (m>1)     " << fake << "\n";
    if (unverified.empty()) {
        std::cout << "unverified positives: none\n";
    } else {
        std::cout << "unverified positives:\n";
        for (const auto& id : unverified) std::cout << "  " << id << "\n";
    }
    return corrupt.empty() ? 0 : 1;
}

int cmd_subdivide(const std::string& path, const std::vector<int>& edge,
                  const std::string& format, const std::string& out_path) {
    const auto input = load_single_simplex(path);
    const auto sub =
        subdivide_along_edge(input.simplex, make_face(input.simplex, {edge[0], edge[1]}));
    const auto val = validate_subdivision(sub);

    Output out(out_path);
    if (format == "machine") {
        auto j = io::to_json(sub);
        j["identity"] = io::Json{{"lstar_parent", val.identity.lhs.str()},
                                 {"pieces_sum", val.identity.pieces_sum.str()},
                                 {"cuts_sum", val.identity.cuts_sum.str()},
                                 {"holds", val.identity.holds}};
        j["valid"] = val.ok;
        out.stream() << j.dump() << "\n";
    } else {
        std::ostream& os = out.stream();
        os << "edge (" << sub.edge.indices[0] << "," << sub.edge.indices[1] << "), opposite ("
           << sub.opposite_edge.indices[0] << "," << sub.opposite_edge.indices[1] << ")\n";
        for (std::size_t i = 0; i < sub.pieces.size(); ++i) {
            os << "piece " << i << ":";
            for (const auto& v : sub.pieces[i].verts) os << " " << fmt_point(v);
            os << "\n";
        }
        for (std::size_t i = 0; i < sub.cuts.size(); ++i) {
            os << "cut " << i << ":";
            for (const auto& v : sub.cuts[i].verts) os << " " << fmt_point(v);
            os << "\n";
        }
        os << "identity: " << val.identity.lhs << " = " << val.identity.pieces_sum << " + "
           << val.identity.cuts_sum << (val.identity.holds ? " (holds)" : " (fails)") << "\n";
        os << "validation: " << (val.ok ? "ok" : "failed") << "\n";
    }
    return 0;
}

int cmd_fine_interior(const std::string& path, std::optional<long long> fine_bound,
                      const std::string& format, const std::string& out_path) {
    const auto input = load_single_simplex(path);
    const auto r = fine_interior(input.simplex, fine_bound);

    Output out(out_path);
    if (format == "machine") {
        io::Json j;
        j["fine_dim"] = io::to_json(dim_certificate(r));
        io::Json verts = io::Json::array();
        for (const auto& v : r.vertices)
            verts.push_back({v.x.str(), v.y.str(), v.z.str()});
        j["vertices"] = std::move(verts);
        j["bound_used"] = r.bound_used;
        j["stable"] = r.stable;
        out.stream() << j.dump() << "\n";
    } else {
        out.stream() << fine_interior_line(r) << "\n";
    }
    return 0;
}

int cmd_weights(const std::string& path, const std::string& format, const std::string& out_path) {
    const auto input = load_single_simplex(path);
    const auto w = weights_from_simplex(input.simplex);

    Output out(out_path);
    if (format == "machine")
        out.stream() << io::to_json(w).dump() << "\n";
    else
        out.stream() << weights_line(w) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides a combinatorial Picard-number criterion for lattice 3-simplices"};
    app.require_subcommand(1);

    std::string file, out_path, format = "text", degree_mode = "anticanonical";
    std::string search_format = "machine"; // the catalog stream is the artifact
    std::string simplex_file, catalog;
    std::optional<long long> fine_bound;
    long long q_max = 1;
    int jobs = 1;
    std::vector<int> edge = {0, 1};

    const auto format_check = CLI::IsMember({"text", "machine", "csv"});

    auto* check = app.add_subcommand("check", "decide the criterion for one simplex");
    check->add_option("file", file, "simplex record file")->required();
    check->add_option("--fine-bound", fine_bound, "override the fine-interior search bound");
    check->add_option("--format", format, "output style")->check(format_check);
    check->add_option("--out", out_path, "write output to this path");

    auto* search = app.add_subcommand("search", "scan weight systems or a simplex file");
    search->add_option("--q-max", q_max, "largest weight to enumerate");
    search->add_option("--degree-mode", degree_mode, "anticanonical or divisors:D");
    search->add_option("--simplex-file", simplex_file, "scan records from this file instead");
    search->add_option("--fine-bound", fine_bound, "override the fine-interior search bound");
    search->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
    search->add_option("--format", search_format, "output style")->check(format_check);
    search->add_option("--out", out_path, "write records to this path");

    auto* report = app.add_subcommand("report", "summarize a machine-format catalog");
    report->add_option("catalog", catalog, "catalog file of machine records")->required();

    auto* subdivide = app.add_subcommand("subdivide", "maximal subdivision along one edge");
    subdivide->add_option("file", file, "simplex record file")->required();
    subdivide->add_option("--edge", edge, "edge vertex indices")->expected(2);
    subdivide->add_option("--format", format, "output style")->check(CLI::IsMember({"text", "machine"}));
    subdivide->add_option("--out", out_path, "write output to this path");

    auto* fine = app.add_subcommand("fine-interior", "shrunk-region dimension and vertices");
    fine->add_option("file", file, "simplex record file")->required();
    fine->add_option("--fine-bound", fine_bound, "override the fine-interior search bound");
    fine->add_option("--format", format, "output style")->check(CLI::IsMember({"text", "machine"}));
    fine->add_option("--out", out_path, "write output to this path");

    auto* weights = app.add_subcommand("weights", "weight system of the normal fan");
    weights->add_option("file", file, "simplex record file")->required();
    weights->add_option("--format", format, "output style")->check(CLI::IsMember({"text", "machine"}));
    weights->add_option("--out", out_path, "write output to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(file, fine_bound, format, out_path);
        if (search->parsed())
            return cmd_search(q_max, degree_mode, simplex_file, fine_bound, jobs, search_format,
                              out_path);
        if (report->parsed()) return cmd_report(catalog);
        if (subdivide->parsed()) return cmd_subdivide(file, edge, format, out_path);
        if (fine->parsed()) return cmd_fine_interior(file, fine_bound, format, out_path);
        if (weights->parsed()) return cmd_weights(file, format, out_path);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
