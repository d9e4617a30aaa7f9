#include <pilearn/csv.hpp>
#include <pilearn/dot.hpp>
#include <pilearn/error.hpp>
#include <pilearn/generators.hpp>
#include <pilearn/model_json.hpp>
#include <pilearn/pi_oracle.hpp>
#include <pilearn/report.hpp>
#include <pilearn/search.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace pilearn;

namespace {

Dataset read(const std::string& text, const std::optional<Domain>& schema = std::nullopt) {
    std::istringstream in(text);
    return read_dataset_csv(in, schema);
}

}  // namespace

TEST_CASE("csv reading infers cardinalities") {
    const auto data = read("x, y\r\n0,2\n1, 0\n\n");
    CHECK(data.domain().names() == std::vector<std::string>{"x", "y"});
    CHECK(data.domain()[0].cardinality == 2);
    CHECK(data.domain()[1].cardinality == 3);
    CHECK(data.size() == 2);
    CHECK(data.value(0, 1) == 2);
}

TEST_CASE("csv reading honours a schema") {
    const Domain schema({{"x", 3}, {"y", 2}});
    const auto data = read("x,y\n0,1\n", schema);
    CHECK(data.domain() == schema);
    CHECK_THROWS_AS(read("x,y\n3,1\n", schema), InputError);
    CHECK_THROWS_AS(read("y,x\n0,1\n", schema), InputError);
}

TEST_CASE("malformed csv is an input error") {
    CHECK_THROWS_AS(read(""), InputError);
    CHECK_THROWS_AS(read("x,y\n0\n"), InputError);
    CHECK_THROWS_AS(read("x,y\n0,1,1\n"), InputError);
    CHECK_THROWS_AS(read("x,y\n0,a\n"), InputError);
    CHECK_THROWS_AS(read("x,y\n0,-1\n"), InputError);
    CHECK_THROWS_AS(read("x,y\n0,1.5\n"), InputError);
    CHECK_THROWS_AS(read("x,x\n0,1\n"), InputError);
    CHECK_THROWS_AS(parse_dataset_csv("/nonexistent/data.csv"), InputError);
}

TEST_CASE("csv round trip") {
    const auto data = sample_joint(music_box_model(), 50, 2);
    std::ostringstream out;
    write_dataset_csv(out, data);
    const auto back = read(out.str(), data.domain());
    CHECK(back == data);
}

TEST_CASE("schema json round trip") {
    const Domain dom({{"x", 3}, {"y", 2}});
    CHECK(schema_from_json(schema_to_json(dom)) == dom);
    CHECK_THROWS_AS(schema_from_json("{\"variables\": [{\"name\": \"x\"}]}"), InputError);
    CHECK_THROWS_AS(schema_from_json("not json"), InputError);
}

TEST_CASE("model json round trips both forms") {
    const auto table1 = table1_model();
    CHECK(model_from_json(joint_to_json(table1, "table1")).domain() == table1.domain());
    const auto back = model_from_json(joint_to_json(table1));
    for (std::size_t c = 0; c < table1.size(); ++c) {
        CHECK(back.probability(c) == doctest::Approx(table1.probability(c)).epsilon(1e-12));
    }
    const auto music = music_box_model();
    const auto from_bayes = model_from_json(bayes_to_json(music_box_spec()));
    for (std::size_t c = 0; c < music.size(); ++c) {
        CHECK(from_bayes.probability(c) == doctest::Approx(music.probability(c)).epsilon(1e-12));
    }
}

TEST_CASE("joint json fills missing assignments with zero") {
    const auto joint = model_from_json(R"({"variables": [{"name": "x", "cardinality": 2}],
                                           "joint": [{"assignment": [1], "p": 1.0}]})");
    CHECK(joint.probability(0) == 0.0);
    CHECK(joint.probability(1) == 1.0);
}

TEST_CASE("malformed model json is an input error") {
    const std::string vars = R"("variables": [{"name": "x", "cardinality": 2}])";
    CHECK_THROWS_AS(model_from_json("{"), InputError);
    CHECK_THROWS_AS(model_from_json("{" + vars + "}"), InputError);
    CHECK_THROWS_AS(model_from_json("{" + vars + R"(, "joint": [{"assignment": [0], "p": 0.5}]})"), InputError);
    CHECK_THROWS_AS(model_from_json("{" + vars + R"(, "joint": [{"assignment": [2], "p": 1.0}]})"), InputError);
    CHECK_THROWS_AS(model_from_json("{" + vars +
                                    R"(, "joint": [{"assignment": [0], "p": 0.5}, {"assignment": [0], "p": 0.5}]})"),
                    InputError);
    CHECK_THROWS_AS(model_from_json("{" + vars + R"(, "joint": [{"assignment": [0], "p": -1}]})"), InputError);
    CHECK_THROWS_AS(
        model_from_json(R"({"bayes": {"nodes": [{"name": "x", "parents": ["y"], "cpt": [[0.5, 0.5]]}]}})"),
        InputError);
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), InputError);
}

TEST_CASE("built-in model names") {
    CHECK(load_model("table1") == table1_model());
    CHECK(load_model("music-box") == music_box_model());
    CHECK(load_model("music_box") == music_box_model());
}

TEST_CASE("run report json round trip") {
    SearchConfig cfg{ProbabilitySource(table1_model())};
    cfg.max_links = 2;
    const auto result = ml_learn(cfg);

    RunReport report;
    report.config = {"ml", 2, 0.001, "model", "table1", 0, std::nullopt};
    report.variables = cfg.source.domain().names();
    report.links = result.graph.links();
    report.trace = result.trace;
    report.coloring = color_links(result.graph, cfg.source, 1e-6).links;
    report.is_imap = true;

    const auto text = report_to_json(report);
    CHECK(text.find("\"learned_links\"") != std::string::npos);
    CHECK(text.find("\"candidates_enumerated\"") != std::string::npos);
    CHECK(report_from_json(text) == report);
    CHECK_THROWS_AS(report_from_json("[]"), InputError);
}

TEST_CASE("dot export") {
    const Domain dom({{"x", 2}, {"y", 2}, {"z", 2}});
    const Graph g(3, LinkSet{{0, 1}, {1, 2}});
    const auto plain = to_dot(g, dom);
    CHECK(plain == "graph G {\n  \"x\";\n  \"y\";\n  \"z\";\n  \"x\" -- \"y\";\n  \"y\" -- \"z\";\n}\n");

    const ColoredGraph colored{g, {{{0, 1}, LinkColor::colored}, {{1, 2}, LinkColor::black}}};
    const auto text = to_dot(colored, dom);
    CHECK(text.find("\"x\" -- \"y\" [style=dotted];") != std::string::npos);
    CHECK(text.find("\"y\" -- \"z\";") != std::string::npos);
    CHECK_THROWS_AS(export_dot(g, dom, "/nonexistent/dir/g.dot"), InputError);
}

namespace {

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("PILEARN_MODELS_DIR");
    return std::string(dir ? dir : "data/models") + "/" + name;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("shipped fixtures match the built-in models") {
    const auto table1 = parse_model_json(fixture("table1.json"));
    const auto expected = table1_model();
    CHECK(table1.domain() == expected.domain());
    for (std::size_t c = 0; c < expected.size(); ++c) {
        CHECK(table1.probability(c) == doctest::Approx(expected.probability(c)).epsilon(1e-12));
    }
    const auto music = parse_model_json(fixture("music_box.json"));
    CHECK(music.domain().size() == 8);
    CHECK(music.domain() == music_box_model().domain());
    for (std::size_t c = 0; c < music.size(); ++c) {
        CHECK(music.probability(c) == doctest::Approx(music_box_model().probability(c)).epsilon(1e-12));
    }
}

TEST_CASE("ragged rows are reported as such") {
    try {
        (void)read("d,a,b,c\n0,1,0\n");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("ragged") != std::string::npos);
    }
}

TEST_CASE("dot output of the reference graphs") {
    const ProbabilitySource table1(table1_model());
    const auto colored = color_links(Graph::complete(4), table1, 1e-6);
    const auto text = to_dot(colored, table1.domain());
    CHECK(count(text, " -- ") == 6);
    CHECK(count(text, "[style=dotted]") == 5);

    const auto empty = to_dot(Graph(4), table1.domain());
    CHECK(count(empty, " -- ") == 0);
    CHECK(count(empty, ";\n") == 4);

    SearchConfig cfg{ProbabilitySource(music_box_model())};
    cfg.max_links = 3;
    cfg.delta_h = 0.004;
    const auto learned = ml_learn(cfg);
    CHECK(count(to_dot(learned.graph, cfg.source.domain()), " -- ") == 12);
}
