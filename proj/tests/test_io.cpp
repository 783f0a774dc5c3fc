#include "doctest.h"

#include "latpic/io.hpp"
#include "latpic/subdivision.hpp"

#include <string>
#include <vector>

using namespace latpic;

namespace {

Simplex3 wedge_fixture() {
    return make_simplex3({LatticeVector{0, 0, 0}, LatticeVector{2, 0, 0},
                          LatticeVector{1, 4, 0}, LatticeVector{1, 0, 4}});
}

Simplex3 dilated_unit(long long d) {
    return make_simplex3({LatticeVector{0, 0, 0}, LatticeVector{d, 0, 0},
                          LatticeVector{0, d, 0}, LatticeVector{0, 0, d}});
}

} // namespace

TEST_CASE("simplex JSON round trip with frozen single-line form") {
    const auto s = wedge_fixture();
    const auto j = io::to_json(s);
    CHECK(j.dump() == R"({"vertices":[[0,0,0],[2,0,0],[1,4,0],[1,0,4]]})");
    CHECK(io::simplex_from_json(io::Json::parse(j.dump())) == s);
}

TEST_CASE("simplex file: single object, array, and one record per line") {
    const std::string pretty = "{\n  \"vertices\": [[0,0,0], [2,0,0],\n"
                               "                [1,4,0], [1,0,4]]\n}\n";
    auto single = io::parse_simplex_file(pretty, "f");
    REQUIRE(single.size() == 1);
    CHECK(single[0].id == "f#0");
    CHECK(single[0].simplex == wedge_fixture());

    const std::string array_text = R"([{"vertices":[[0,0,0],[2,0,0],[1,4,0],[1,0,4]]},)"
                                   R"({"vertices":[[0,0,0],[5,0,0],[0,5,0],[0,0,5]]}])";
    auto arr = io::parse_simplex_file(array_text, "f");
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].id == "f#0");
    CHECK(arr[1].id == "f#1");
    CHECK(arr[1].simplex == dilated_unit(5));

    const std::string lines = "\n" R"({"vertices":[[0,0,0],[2,0,0],[1,4,0],[1,0,4]]})" "\n\n" +
                              io::to_json(dilated_unit(5)).dump() + "\n";
    auto nd = io::parse_simplex_file(lines, "g");
    REQUIRE(nd.size() == 2);
    CHECK(nd[0].simplex == wedge_fixture());
    CHECK(nd[1].simplex == dilated_unit(5));
}

TEST_CASE("simplex file errors carry positions and reasons") {
    auto message_of = [](const std::string& text, const std::string& name) {
        try {
            io::parse_simplex_file(text, name);
        } catch (const io::ParseError& e) {
            return std::string(e.what());
        }
        return std::string("(no error)");
    };

    // Syntax error on the second line of a pretty-printed object.
    const std::string broken = "{\n  \"vertices\": oops\n}";
    const auto syntax = message_of(broken, "bad.json");
    CHECK(syntax.find("bad.json:2:") == 0);

    // Wrong vertex count.
    CHECK(message_of(R"({"vertices":[[0,0,0],[1,0,0],[0,1,0]]})", "f").find(
              "array of 4 points") != std::string::npos);

    // Non-integer coordinate.
    CHECK(message_of(R"({"vertices":[[0,0,0.5],[1,0,0],[0,1,0],[0,0,1]]})", "f").find(
              "must be an integer") != std::string::npos);

    // Coplanar vertices are rejected as input errors, not crashes.
    CHECK(message_of(R"({"vertices":[[0,0,0],[1,0,0],[0,1,0],[1,1,0]]})", "f").find(
              "affinely dependent") != std::string::npos);

    // One record per line: the failing line number is reported.
    const std::string second_bad = io::to_json(wedge_fixture()).dump() + "\n{oops}\n";
    CHECK(message_of(second_bad, "g").find("g:2:") == 0);
}

TEST_CASE("decision serialization for the positive fixture") {
    const auto d = decide(wedge_fixture());
    const auto j = io::to_json(d);
    CHECK(j.at("verdict") == "PicardGreaterOne");
    CHECK(j.at("lstar") == 3);
    CHECK(j.at("fine_dim").at("certified") == true);
    CHECK(j.at("fine_dim").at("dim") == 2);
    CHECK(j.at("witness_edge") == io::Json::array({0, 1}));
    CHECK(j.at("margin") == 3);
    CHECK(j.at("p_g") == 3);
    CHECK(j.at("vanishing_dim") == 6);
    REQUIRE(j.at("per_edge").size() == 2);
    CHECK(j.at("per_edge")[0].at("edge") == io::Json::array({0, 1}));
    CHECK(j.at("per_edge")[0].at("margin") == 3);
    CHECK(j.at("per_edge")[1].at("edge") == io::Json::array({2, 3}));
    CHECK(j.at("per_edge")[1].at("margin") == -1);
    CHECK(j.at("assumption") == kNondegeneracyAssumption);
    CHECK_FALSE(j.contains("note"));
    CHECK(j.at("hypotheses").at("all_hold") == true);
}

TEST_CASE("decision serialization for hypothesis failures keeps the reasons") {
    const auto d = decide(make_simplex3({LatticeVector{0, 0, 0}, LatticeVector{1, 0, 0},
                                         LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}}));
    const auto j = io::to_json(d);
    CHECK(j.at("verdict") == "HypothesisFailed");
    CHECK_FALSE(j.contains("witness_edge"));
    CHECK_FALSE(j.contains("margin"));
    CHECK_FALSE(j.contains("p_g"));
    const auto& reasons = j.at("hypotheses").at("reasons");
    CHECK(reasons.size() >= 1);
    CHECK(std::find(reasons.begin(), reasons.end(), "no interior lattice points") != reasons.end());
}

TEST_CASE("subdivision serialization shape") {
    const auto s = wedge_fixture();
    const auto sub = subdivide_along_edge(s, make_face(s, {0, 1}));
    const auto j = io::to_json(sub);
    CHECK(j.at("edge") == io::Json::array({0, 1}));
    CHECK(j.at("opposite_edge") == io::Json::array({2, 3}));
    REQUIRE(j.at("pieces").size() == 2);
    REQUIRE(j.at("cuts").size() == 1);
    CHECK(j.at("pieces")[0].size() == 4);
    CHECK(j.at("cuts")[0].size() == 3);
}

TEST_CASE("catalog records: machine line and CSV row") {
    io::CatalogRecord rec;
    rec.id = "w0";
    rec.simplex = wedge_fixture();
    rec.weights = weights_from_simplex(rec.simplex);
    rec.decision = decide(rec.simplex);
    rec.reverified = true;
    rec.timing_ms = 7;

    const auto j = io::to_json(rec);
    CHECK(j.at("id") == "w0");
    CHECK(j.at("weights") == io::Json::array({1, 1, 2, 2}));
    CHECK_FALSE(j.contains("degree"));
    CHECK(j.at("multiplicity") == 4);
    CHECK(j.at("well_formed") == true);
    CHECK(j.at("reverified") == true);
    CHECK(j.at("timing_ms") == 7);
    CHECK_FALSE(io::to_json(rec, false).contains("timing_ms"));

    CHECK(io::to_csv_row(rec) == "w0,1,1,2,2,,4,3,2,PicardGreaterOne,3,3,6");

    io::CatalogRecord quintic;
    quintic.id = "q1-1-1-1-d5";
    quintic.simplex = simplex_from_weights({1, 1, 1, 1}, 5);
    quintic.weights = weights_from_simplex(quintic.simplex);
    quintic.degree = 5;
    quintic.decision = decide(quintic.simplex);
    CHECK(io::to_csv_row(quintic) == "q1-1-1-1-d5,1,1,1,1,5,1,4,3,Inconclusive,-4,,");

    CHECK(std::string(io::kCsvHeader) ==
          "id,q0,q1,q2,q3,degree,multiplicity,lstar,fine_dim,verdict,margin,p_g,vanishing_dim");
}

TEST_CASE("report entries parse from catalog lines and reject corrupt ones") {
    io::CatalogRecord rec;
    rec.id = "w0";
    rec.simplex = wedge_fixture();
    rec.weights = weights_from_simplex(rec.simplex);
    rec.decision = decide(rec.simplex);
    rec.reverified = true;

    const auto e = io::report_entry_from_json(io::to_json(rec));
    CHECK(e.id == "w0");
    CHECK(e.verdict == Verdict::PicardGreaterOne);
    REQUIRE(e.margin.has_value());
    CHECK(*e.margin == 3);
    CHECK(e.multiplicity == 4);
    CHECK(e.reverified);

    auto corrupt = io::to_json(rec);
    corrupt.erase("verdict");
    CHECK_THROWS_AS(io::report_entry_from_json(corrupt), io::ParseError);
    corrupt = io::to_json(rec);
    corrupt["verdict"] = "Maybe";
    CHECK_THROWS_AS(io::report_entry_from_json(corrupt), io::ParseError);
    corrupt = io::to_json(rec);
    corrupt["margin"] = "three";
    CHECK_THROWS_AS(io::report_entry_from_json(corrupt), io::ParseError);
}

TEST_CASE("timing strip removes only the informational fields") {
    io::CatalogRecord rec;
    rec.id = "w0";
    rec.simplex = wedge_fixture();
    rec.weights = weights_from_simplex(rec.simplex);
    rec.decision = decide(rec.simplex);
    rec.reverified = true;

    io::CatalogRecord slow = rec;
    slow.timing_ms = 900;
    rec.timing_ms = 3;

    const std::string a = io::to_json(rec).dump() + "\n" + io::to_json(rec).dump() + "\n";
    const std::string b = io::to_json(slow).dump() + "\n\n" + io::to_json(slow).dump() + "\n";
    CHECK(a != b);
    CHECK(io::strip_timing_fields(a) == io::strip_timing_fields(b));
    CHECK(io::strip_timing_fields(a).find("timing_ms") == std::string::npos);
    // Stripping is idempotent.
    CHECK(io::strip_timing_fields(io::strip_timing_fields(a)) == io::strip_timing_fields(a));
}
