#include <cli.hpp>

#include <doctest.h>
#include <json.hpp>

#include <pilearn/csv.hpp>
#include <pilearn/generators.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pilearn::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "pilearn_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string models_dir() {
    const char* dir = std::getenv("PILEARN_MODELS_DIR");
    return dir ? dir : "data/models";
}

std::vector<std::vector<std::string>> links_of(const json& report) {
    return report.at("links").get<std::vector<std::vector<std::string>>>();
}

}  // namespace

TEST_CASE("learn on the exact table1 model") {
    const auto r = run({"learn", "--model", "table1", "--max-links", "2", "--threshold", "0.001"});
    REQUIRE(r.code == kOk);
    const auto report = json::parse(r.out);
    CHECK(links_of(report).size() == 6);
    CHECK(report.at("is_imap") == true);
    CHECK(report.at("config").at("source_kind") == "model");
    CHECK(report.at("variables") == json({"d", "a", "b", "c"}));
    const auto& first = report.at("trace").at("passes").at(0);
    CHECK(first.at("learned_links") == json::array({json::array({"d", "c"})}));
    CHECK(first.at("decrement").get<double>() == doctest::Approx(0.0033376694862192746).epsilon(1e-9));
}

TEST_CASE("learn from the shipped model files") {
    const auto r = run({"learn", "--model", models_dir() + "/music_box.json", "-k", "3", "--threshold", "0.004"});
    REQUIRE(r.code == kOk);
    const auto report = json::parse(r.out);
    CHECK(links_of(report).size() == 12);
    CHECK(report.at("is_imap") == true);
}

TEST_CASE("generate then learn from csv") {
    const auto csv = scratch("table1.csv");
    const auto schema = scratch("table1.schema.json");
    const auto report_path = scratch("report.json");
    const auto dot_path = scratch("report.dot");
    REQUIRE(run({"generate", "--model", "table1", "--n", "300", "--seed", "4", "--out", csv.string(), "--schema-out",
                 schema.string()})
                .code == kOk);
    const auto r = run({"learn", "--data", csv.string(), "--schema", schema.string(), "--reference", "table1", "-k",
                        "2", "--color", "--out", report_path.string(), "--dot", dot_path.string()});
    REQUIRE(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream in(report_path);
    const auto report = json::parse(in);
    CHECK(report.at("config").at("cases") == 300);
    CHECK(report.at("config").at("source_kind") == "data");
    CHECK(report.at("is_imap").is_boolean());
    CHECK(report.at("coloring").is_array());
    CHECK(std::filesystem::file_size(dot_path) > 0);

    const auto again = run({"analyze", "--model", "table1", "--graph", report_path.string()});
    CHECK(again.code == kOk);
}

TEST_CASE("sampled learning echoes the seed") {
    const auto r = run({"learn", "--model", "table1", "--sample", "200", "--seed", "9"});
    REQUIRE(r.code == kOk);
    const auto report = json::parse(r.out);
    CHECK(report.at("config").at("seed") == 9);
    CHECK(report.at("config").at("source_kind") == "sample");
}

TEST_CASE("generation is reproducible") {
    const auto a = run({"generate", "--model", "music-box", "--n", "20", "--seed", "1"});
    const auto b = run({"generate", "--model", "music-box", "--n", "20", "--seed", "1"});
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("ball1,ball2,ball3,light1,light2,music_box,dog,John\n", 0) == 0);
}

TEST_CASE("analyze reports submodels, classifications and graph checks") {
    const auto r = run({"analyze", "--model", "table1", "--classify", "d,a,c", "--complete"});
    REQUIRE(r.code == kOk);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("embedded_submodels").size() == 3);
    CHECK(doc.at("smallest_sufficient_k") == 2);
    CHECK(doc.at("classifications").at(0).at("verdict") == "partial");
    const auto& graph = doc.at("graph");
    CHECK(graph.at("chordal") == true);
    CHECK(graph.at("is_imap") == true);
    CHECK(graph.at("black_links") == json::array({json::array({"d", "c"})}));

    const auto square = run({"analyze", "--model", "table1", "--link", "d,a", "--link", "a,c", "--link", "c,b",
                             "--link", "b,d"});
    REQUIRE(square.code == kOk);
    CHECK(json::parse(square.out).at("graph").at("chordal") == false);
}

TEST_CASE("compare prints one row per mode") {
    const auto r = run({"compare", "--model", "table1", "-k", "2"});
    REQUIRE(r.code == kOk);
    CHECK(r.out.find("ml ") != std::string::npos);
    CHECK(r.out.find("straightforward") != std::string::npos);
    CHECK(r.out.find("single") != std::string::npos);
    const auto j = run({"compare", "--model", "table1", "-k", "2", "--json"});
    REQUIRE(j.code == kOk);
    const auto reports = json::parse(j.out);
    REQUIRE(reports.size() == 3);
    CHECK(reports.at(0).at("is_imap") == true);
    CHECK(reports.at(1).at("is_imap") == false);
    CHECK(reports.at(2).at("is_imap") == false);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == kUsage);
    CHECK(run({"bogus"}).code == kUsage);
    CHECK(run({"learn"}).code == kUsage);
    CHECK(run({"learn", "--model", "table1", "--data", "x.csv"}).code == kUsage);
    CHECK(run({"learn", "--model", "table1", "--mode", "greedy"}).code == kUsage);
    CHECK(run({"learn", "--model", "table1", "--max-links", "0"}).code == kUsage);
    CHECK(run({"learn", "--model", "table1", "--threshold", "-1"}).code == kUsage);
    CHECK(run({"learn", "--model", "table1", "--seed", "3"}).code == kUsage);
    CHECK(run({"learn", "--data", "x.csv", "--sample", "10"}).code == kUsage);
    CHECK(run({"analyze", "--model", "table1", "--max-size", "2"}).code == kUsage);
    CHECK(run({"generate", "--model", "table1"}).code == kUsage);
}

TEST_CASE("input errors exit with 3") {
    const auto missing = run({"learn", "--data", "/nonexistent/cases.csv"});
    CHECK(missing.code == kInput);
    CHECK(missing.err.find("input error") != std::string::npos);
    CHECK(run({"learn", "--model", "/nonexistent/model.json"}).code == kInput);

    const auto bad = scratch("bad.csv");
    std::ofstream(bad) << "x,y\n0,1\n1\n";
    CHECK(run({"learn", "--data", bad.string()}).code == kInput);
    CHECK(run({"analyze", "--model", "table1", "--classify", "d,a,zz"}).code == kInput);
}

TEST_CASE("generated csv parses back to the sampled dataset") {
    const auto csv = scratch("seed7.csv");
    REQUIRE(run({"generate", "--model", "table1", "--n", "1000", "--seed", "7", "--out", csv.string()}).code == kOk);
    const auto data = pilearn::parse_dataset_csv(csv);
    CHECK(data == pilearn::sample_joint(pilearn::table1_model(), 1000, 7));
}

TEST_CASE("learning from a generated file equals learning from the in-memory sample") {
    const auto csv = scratch("music2000.csv");
    REQUIRE(run({"generate", "--model", "music-box", "--n", "2000", "--seed", "3", "--out", csv.string()}).code ==
            kOk);
    const auto from_file = run({"learn", "--data", csv.string(), "-k", "3", "--threshold", "0.004"});
    const auto in_memory = run({"learn", "--model", "music-box", "--sample", "2000", "--seed", "3", "-k", "3",
                                "--threshold", "0.004"});
    REQUIRE(from_file.code == kOk);
    REQUIRE(in_memory.code == kOk);
    const auto a = json::parse(from_file.out);
    const auto b = json::parse(in_memory.out);
    CHECK(a.at("links") == b.at("links"));
    CHECK(a.at("trace") == b.at("trace"));
}

TEST_CASE("output is byte deterministic") {
    const std::vector<std::string> args{"learn", "--model", "music-box", "-k", "3", "--threshold", "0.004", "--color"};
    CHECK(run(args).out == run(args).out);
    const auto d1 = scratch("d1.dot");
    const auto d2 = scratch("d2.dot");
    run({"learn", "--model", "table1", "-k", "2", "--color", "--dot", d1.string()});
    run({"learn", "--model", "table1", "-k", "2", "--color", "--dot", d2.string()});
    std::ifstream f1(d1), f2(d2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK_FALSE(s1.str().empty());
}

TEST_CASE("compare link counts on table1") {
    const auto j = run({"compare", "--model", "table1", "--max-links", "2", "--json"});
    REQUIRE(j.code == kOk);
    const auto reports = json::parse(j.out);
    CHECK(reports.at(0).at("links").size() == 6);
    CHECK(reports.at(1).at("links").size() == 5);
    CHECK(reports.at(2).at("links").size() == 1);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("learn") != std::string::npos);
}
