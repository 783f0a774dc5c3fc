#include "latpic/io.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace latpic::io {

namespace {

std::string position_message(const std::string& name, int line, int column,
                             const std::string& message) {
    std::ostringstream os;
    os << name << ":" << line << ":" << column << ": " << message;
    return os.str();
}

// nlohmann reports a 1-based byte offset; convert it to line/column.
std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, column = 1;
    const std::size_t stop = byte == 0 ? 0 : byte - 1;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Drop nlohmann's "[json.exception...]" tag; keep the human part.
std::string clean_json_message(const char* what) {
    std::string w = what;
    if (auto pos = w.find("] "); pos != std::string::npos) w = w.substr(pos + 2);
    return w;
}

long long to_int64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for serialization");
    return v.convert_to<long long>();
}

Json edge_json(const std::pair<int, int>& e) { return Json::array({e.first, e.second}); }

Json vertex_list_json(const std::vector<LatticeVector>& verts) {
    Json arr = Json::array();
    for (const auto& v : verts) arr.push_back({to_int64(v[0]), to_int64(v[1]), to_int64(v[2])});
    return arr;
}

Int int_from_json(const Json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ParseError(what + " must be an integer", 0, 0);
    return Int(j.get<long long>());
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "PicardGreaterOne") return Verdict::PicardGreaterOne;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    if (s == "HypothesisFailed") return Verdict::HypothesisFailed;
    throw ParseError("unknown verdict \"" + s + "\"", 0, 0);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fine_dim_cell(const DimCertificate& c) {
    if (c.is_certified) return std::to_string(c.dim);
    return std::to_string(c.lo) + ".." + std::to_string(c.hi);
}

} // namespace

ParseError::ParseError(std::string message, int line_, int column_)
    : std::runtime_error(std::move(message)), line(line_), column(column_) {}

Json to_json(const Simplex3& s) {
    Json j;
    j["vertices"] = vertex_list_json({s.v.begin(), s.v.end()});
    return j;
}

Simplex3 simplex_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("record must be an object", 0, 0);
    if (!j.contains("vertices")) throw ParseError("record lacks a \"vertices\" key", 0, 0);
    const Json& vs = j.at("vertices");
    if (!vs.is_array() || vs.size() != 4)
        throw ParseError("\"vertices\" must be an array of 4 points", 0, 0);
    std::array<LatticeVector, 4> verts;
    for (std::size_t i = 0; i < 4; ++i) {
        const Json& p = vs[i];
        if (!p.is_array() || p.size() != 3)
            throw ParseError("vertex " + std::to_string(i) + " must be an array of 3 integers", 0,
                             0);
        for (std::size_t t = 0; t < 3; ++t)
            verts[i][static_cast<int>(t)] =
                int_from_json(p[t], "vertex " + std::to_string(i) + " coordinate");
    }
    try {
        return make_simplex3(verts);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

std::vector<SimplexInput> parse_simplex_file(const std::string& text, const std::string& name) {
    auto fail = [&](int line, int column, const std::string& msg) -> ParseError {
        return ParseError(position_message(name, line, column, msg), line, column);
    };
    auto records_from = [&](const Json& j) {
        std::vector<SimplexInput> out;
        if (j.is_object()) {
            out.push_back({name + "#0", simplex_from_json(j)});
        } else if (j.is_array()) {
            for (std::size_t k = 0; k < j.size(); ++k) {
                try {
                    out.push_back({name + "#" + std::to_string(k), simplex_from_json(j[k])});
                } catch (const ParseError& e) {
                    throw fail(1, 1, "record " + std::to_string(k) + ": " + e.what());
                }
            }
        } else {
            throw fail(1, 1, "top-level value must be an object or an array of objects");
        }
        return out;
    };

    try {
        return records_from(Json::parse(text));
    } catch (const Json::parse_error& whole) {
        // One record per line is also accepted; retry in that mode, but only
        // when each line is shaped like a self-contained object, so breakage
        // inside a pretty-printed record keeps its true position.
        std::vector<std::pair<int, std::string>> lines; // (1-based line number, text)
        std::istringstream is(text);
        std::string line;
        int n = 0;
        bool record_shaped = true;
        while (std::getline(is, line)) {
            ++n;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = line.find_last_not_of(" \t\r");
            if (line[first] != '{' || line[last] != '}') record_shaped = false;
            lines.emplace_back(n, line);
        }
        if (!record_shaped || lines.size() < 2) {
            auto [l, c] = line_column(text, whole.byte);
            throw fail(l, c, clean_json_message(whole.what()));
        }
        std::vector<SimplexInput> out;
        for (const auto& [num, body] : lines) {
            try {
                out.push_back({name + "#" + std::to_string(out.size()),
                               simplex_from_json(Json::parse(body))});
            } catch (const Json::parse_error& e) {
                auto [l, c] = line_column(body, e.byte);
                (void)l;
                throw fail(num, c, clean_json_message(e.what()));
            } catch (const ParseError& e) {
                throw fail(num, 1, e.what());
            }
        }
        return out;
    } catch (const ParseError& e) {
        if (e.line > 0) throw;
        throw fail(1, 1, e.what());
    }
}

Json to_json(const WeightSystem& w, const std::optional<Int>& degree) {
    Json j;
    j["weights"] = Json::array({to_int64(w.weights[0]), to_int64(w.weights[1]),
                                to_int64(w.weights[2]), to_int64(w.weights[3])});
    if (degree) j["degree"] = to_int64(*degree);
    j["multiplicity"] = to_int64(w.multiplicity);
    j["well_formed"] = w.well_formed;
    return j;
}

Json to_json(const EdgeSubdivision& sub) {
    Json j;
    j["edge"] = Json::array({sub.edge.indices[0], sub.edge.indices[1]});
    j["opposite_edge"] = Json::array({sub.opposite_edge.indices[0], sub.opposite_edge.indices[1]});
    Json pieces = Json::array();
    for (const auto& p : sub.pieces) pieces.push_back(vertex_list_json(p.verts));
    j["pieces"] = std::move(pieces);
    Json cuts = Json::array();
    for (const auto& c : sub.cuts) cuts.push_back(vertex_list_json(c.verts));
    j["cuts"] = std::move(cuts);
    return j;
}

Json to_json(const DimCertificate& c) {
    Json j;
    j["certified"] = c.is_certified;
    if (c.is_certified) {
        j["dim"] = c.dim;
    } else {
        j["lo"] = c.lo;
        j["hi"] = c.hi;
    }
    return j;
}

Json to_json(const Decision& d) {
    Json j;
    j["verdict"] = to_string(d.verdict);
    j["lstar"] = to_int64(d.hypotheses.l_star_delta);
    j["fine_dim"] = to_json(d.hypotheses.fine_dim);

    Json hyp;
    hyp["all_hold"] = d.hypotheses.all_hold;
    hyp["reasons"] = d.hypotheses.reasons;
    Json edges = Json::array();
    for (const auto& [e, l] : d.hypotheses.edges_with_interior)
        edges.push_back(Json::array({edge_json(e), to_int64(l)}));
    hyp["edges_with_interior"] = std::move(edges);
    j["hypotheses"] = std::move(hyp);

    if (d.witness_edge) j["witness_edge"] = edge_json(*d.witness_edge);
    if (d.best_margin) j["margin"] = to_int64(*d.best_margin);
    if (d.budget) {
        j["p_g"] = to_int64(d.budget->p_g);
        j["vanishing_dim"] = to_int64(d.budget->vanishing_dim);
    }

    Json per_edge = Json::array();
    for (const auto& ev : d.per_edge) {
        Json e;
        e["edge"] = edge_json(ev.edge);
        e["lstar"] = to_int64(ev.edge_lstar);
        e["validated"] = ev.validated;
        if (ev.validated && ev.budget)
            e["margin"] = to_int64(ev.budget->margin);
        else
            e["failure"] = ev.failure;
        per_edge.push_back(std::move(e));
    }
    j["per_edge"] = std::move(per_edge);

    if (!d.assumption.empty()) j["assumption"] = d.assumption;
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

const char* const kCsvHeader =
    "id,q0,q1,q2,q3,degree,multiplicity,lstar,fine_dim,verdict,margin,p_g,vanishing_dim";

Json to_json(const CatalogRecord& rec, bool include_timing) {
    Json j;
    j["id"] = rec.id;
    j["vertices"] = to_json(rec.simplex)["vertices"];
    const Json weights_json = to_json(rec.weights, rec.degree);
    for (const auto& [key, value] : weights_json.items()) j[key] = value;
    const Json decision_json = to_json(rec.decision);
    for (const auto& [key, value] : decision_json.items()) j[key] = value;
    j["reverified"] = rec.reverified;
    if (include_timing) j["timing_ms"] = rec.timing_ms;
    return j;
}

std::string to_csv_row(const CatalogRecord& rec) {
    std::ostringstream os;
    os << csv_escape(rec.id);
    for (const auto& q : rec.weights.weights) os << ',' << q;
    os << ',';
    if (rec.degree) os << *rec.degree;
    os << ',' << rec.weights.multiplicity;
    os << ',' << rec.decision.hypotheses.l_star_delta;
    os << ',' << fine_dim_cell(rec.decision.hypotheses.fine_dim);
    os << ',' << to_string(rec.decision.verdict);
    os << ',';
    if (rec.decision.best_margin) os << *rec.decision.best_margin;
    os << ',';
    if (rec.decision.budget) os << rec.decision.budget->p_g;
    os << ',';
    if (rec.decision.budget) os << rec.decision.budget->vanishing_dim;
    return os.str();
}

ReportEntry report_entry_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("record must be an object", 0, 0);
    for (const char* key : {"id", "verdict", "multiplicity"})
        if (!j.contains(key))
            throw ParseError(std::string("record lacks the \"") + key + "\" key", 0, 0);
    if (!j.at("id").is_string()) throw ParseError("\"id\" must be a string", 0, 0);
    if (!j.at("verdict").is_string()) throw ParseError("\"verdict\" must be a string", 0, 0);

    ReportEntry e;
    e.id = j.at("id").get<std::string>();
    e.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    e.multiplicity = int_from_json(j.at("multiplicity"), "\"multiplicity\"");
    if (e.multiplicity < 1) throw ParseError("\"multiplicity\" must be positive", 0, 0);
    if (j.contains("margin")) e.margin = int_from_json(j.at("margin"), "\"margin\"");
    if (j.contains("reverified")) {
        if (!j.at("reverified").is_boolean())
            throw ParseError("\"reverified\" must be a boolean", 0, 0);
        e.reverified = j.at("reverified").get<bool>();
    }
    return e;
}

std::string strip_timing_fields(const std::string& ndjson) {
    std::ostringstream out;
    std::istringstream is(ndjson);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j = Json::parse(line);
        j.erase("timing_ms");
        out << j.dump() << '\n';
    }
    return out.str();
}

} // namespace latpic::io
