#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "spinnet/errors.hpp"
#include "spinnet/ga.hpp"
#include "spinnet/io.hpp"
#include "spinnet/mlp.hpp"

using namespace spinnet;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test case; paths stay inside the build tree.
fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path("io_scratch") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("format_double keeps short values short and long values precise") {
    CHECK(format_double(0.05) == "0.05");
    CHECK(format_double(12.0) == "12");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(-2.5e-9) == "-2.5e-09");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("csv writer emits meta, header, then rows in insertion order") {
    CsvWriter csv;
    csv.set_meta("tool", "spinnet");
    csv.set_meta("seed", "7");
    csv.set_header({"N", "value"});
    csv.add_row({2.0, 0.05});
    csv.add_row_raw({"3", "x"});
    CHECK(csv.to_string() == "# tool=spinnet\n# seed=7\nN,value\n2,0.05\n3,x\n");

    CHECK_THROWS_AS(csv.add_row({1.0, 2.0, 3.0}), std::invalid_argument);

    // Without a header any width goes, and no header line is emitted.
    CsvWriter bare;
    bare.add_row({1.0});
    CHECK(bare.to_string() == "1\n");
}

TEST_CASE("csv writer output is byte-stable") {
    const fs::path dir = scratch("csv");
    CsvWriter csv;
    csv.set_meta("k", "v");
    csv.set_header({"a", "b"});
    csv.add_row({1.5, 2.5});
    csv.write((dir / "one.csv").string());
    csv.write((dir / "two.csv").string());
    CHECK(slurp(dir / "one.csv") == slurp(dir / "two.csv"));
}

TEST_CASE("graph json round trip") {
    const Graph g(4, {{0, 1}, {1, 3}, {2, 3}});
    CHECK(graph_from_json(graph_to_json(g)) == g);

    // Unsorted and reversed pairs normalize on parse.
    const auto j = nlohmann::json::parse(R"({"n": 3, "edges": [[2, 1], [1, 0]]})");
    CHECK(graph_from_json(j) == Graph(3, {{0, 1}, {1, 2}}));

    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 3})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 3, "edges": [[1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse("[]")), std::invalid_argument);
}

TEST_CASE("graph files round trip and report parse failures with the path") {
    const fs::path dir = scratch("graph");
    const Graph g = standard_graph(GraphKind::cycle, 5);
    const std::string path = (dir / "g.json").string();
    write_graph_file(g, path);
    CHECK(read_graph_file(path) == g);

    spit(dir / "broken.json", "{ not json");
    try {
        read_graph_file((dir / "broken.json").string());
        FAIL("expected a parse failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
    }

    CHECK_THROWS_AS(read_graph_file((dir / "absent.json").string()), IoError);
}

TEST_CASE("physics parameters serialize with stable keys") {
    SpinSystemParams p;
    p.scaling = Scaling::kac;
    const nlohmann::json j = params_to_json(p);
    CHECK(j.at("coupling").get<double>() == -1.0);
    CHECK(j.at("field").get<double>() == 0.05);
    CHECK(j.at("temperature").get<double>() == 0.08);
    CHECK(j.at("scaling").get<std::string>() == "kac");
    CHECK(j.at("dn_levels").get<int>() == 2);
}

TEST_CASE("search run serialization carries config, history, and summary") {
    GaConfig cfg;
    cfg.n = 3;
    cfg.population = 6;
    cfg.generations = 2;
    cfg.seed = 4;
    const GaRunRecord run = evolve(cfg);
    const nlohmann::json j = ga_run_to_json(run);

    CHECK(j.at("tool").get<std::string>() == kToolName);
    CHECK(j.at("config").at("n").get<int>() == 3);
    CHECK(j.at("config").at("seed").get<std::uint64_t>() == 4);
    CHECK(j.at("config").at("physics").at("field").get<double>() == 0.05);
    CHECK(j.at("generations").size() == 3);
    CHECK(j.at("generations").at(0).at("generation").get<int>() == 0);
    CHECK(j.at("summary").at("best_dn").get<double>() == run.best_dn);
    CHECK(graph_from_json(j.at("summary").at("best")) == run.best);

    // Serialization is a pure function of the record.
    CHECK(ga_run_to_json(run).dump(2) == j.dump(2));
}

TEST_CASE("record export writes one aggregate csv plus per-run json files") {
    const fs::path dir = scratch("export");
    GaConfig cfg;
    cfg.n = 3;
    cfg.population = 6;
    cfg.generations = 2;

    std::vector<GaRunRecord> records;
    for (std::uint64_t seed : {11, 12}) {
        cfg.seed = seed;
        records.push_back(evolve(cfg));
    }
    const std::string base = (dir / "runs").string();
    export_records(records, base);

    const std::string csv = slurp(dir / "runs.csv");
    CHECK(csv.find("# runs=2\n") != std::string::npos);
    CHECK(csv.find("# seeds=11;12\n") != std::string::npos);
    CHECK(csv.find("# population=6\n") != std::string::npos);
    CHECK(csv.find("N,first_hit_generation,best_dn,best_qfi\n") != std::string::npos);

    CHECK(fs::exists(dir / "runs.run0.json"));
    CHECK(fs::exists(dir / "runs.run1.json"));
    const nlohmann::json j0 = read_json_file((dir / "runs.run0.json").string());
    CHECK(j0.at("config").at("seed").get<std::uint64_t>() == 11);
}

TEST_CASE("record export with no records still writes the header") {
    const fs::path dir = scratch("export_empty");
    export_records({}, (dir / "empty").string());
    const std::string csv = slurp(dir / "empty.csv");
    CHECK(csv.find("# runs=0\n") != std::string::npos);
    CHECK(csv.find("N,first_hit_generation,best_dn,best_qfi\n") != std::string::npos);
    // Meta and header only; the physics block needs at least one record.
    CHECK(csv.find("# population=") == std::string::npos);
}

TEST_CASE("fit serialization") {
    ScalingFit f;
    f.kind = FitKind::power_law;
    f.parity = Parity::odd;
    f.degree = 1;
    f.coefficients = {0.5, 1.7};
    f.exponent = 1.7;
    f.n_points = 5;
    const nlohmann::json j = fit_to_json(f);
    CHECK(j.at("kind").get<std::string>() == "power_law");
    CHECK(j.at("parity").get<std::string>() == "odd");
    CHECK(j.at("exponent").get<double>() == 1.7);
    CHECK(j.at("coefficients").size() == 2);
}

TEST_CASE("model json round trip preserves every weight bit for bit") {
    const fs::path dir = scratch("model");
    MlpModel m = init_model(Parity::odd, TargetKind::qfi, 99);
    m.x_min = 3.0;
    m.x_max = 11.0;
    m.y_mean = -0.25;
    m.y_std = 1.75;
    const std::string path = (dir / "m.json").string();
    write_model_file(m, path);
    const MlpModel back = read_model_file(path);

    for (int l = 0; l < 3; ++l) {
        CHECK(back.weights[l] == m.weights[l]);
        CHECK(back.biases[l] == m.biases[l]);
    }
    CHECK(back.parity == Parity::odd);
    CHECK(back.target == TargetKind::qfi);
    CHECK(back.x_min == 3.0);
    CHECK(back.x_max == 11.0);
    CHECK(back.y_mean == -0.25);
    CHECK(back.y_std == 1.75);
    CHECK(back.seed == 99);

    // Same model predicts the same numbers after a save/load cycle.
    CHECK(forward(back, 7.0) == forward(m, 7.0));
}

TEST_CASE("model json rejects foreign shapes") {
    nlohmann::json j = model_to_json(init_model(Parity::all, TargetKind::dn, 1));
    j["layer_sizes"] = {1, 8, 1};
    CHECK_THROWS_AS(model_from_json(j), std::invalid_argument);

    nlohmann::json truncated = model_to_json(init_model(Parity::all, TargetKind::dn, 1));
    truncated["weights"][0] = std::vector<double>{1.0, 2.0};
    CHECK_THROWS_AS(model_from_json(truncated), std::invalid_argument);

    nlohmann::json missing = model_to_json(init_model(Parity::all, TargetKind::dn, 1));
    missing["biases"].erase(2);
    CHECK_THROWS_AS(model_from_json(missing), std::invalid_argument);
}

TEST_CASE("series csv round trip") {
    const fs::path dir = scratch("series");
    const DataSeries series = {{2.0, 0.1}, {3.0, 0.25}, {4.0, 0.4375}};
    const std::string path = (dir / "s.csv").string();
    write_series_csv(path, "N", "dn", series, {{"note", "unit"}});

    const std::string text = slurp(path);
    CHECK(text.find("# note=unit\n") != std::string::npos);
    CHECK(text.find("N,dn\n") != std::string::npos);

    const DataSeries back = read_series_csv(path);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back[i].first == series[i].first);
        CHECK(back[i].second == series[i].second);
    }
}

TEST_CASE("series reader skips comments and flags bad rows with line numbers") {
    const fs::path dir = scratch("series_bad");
    spit(dir / "ok.csv", "# a=b\n\nN,f\n2,4\n# mid comment\n3,9\n");
    const DataSeries ok = read_series_csv((dir / "ok.csv").string());
    REQUIRE(ok.size() == 2);
    CHECK(ok[1].second == 9.0);

    spit(dir / "bad.csv", "N,f\n2,4\nthree,9\n");
    try {
        read_series_csv((dir / "bad.csv").string());
        FAIL("expected a format failure");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("bad.csv:3") != std::string::npos);
    }

    spit(dir / "narrow.csv", "N,f\n2\n");
    CHECK_THROWS_AS(read_series_csv((dir / "narrow.csv").string()), std::invalid_argument);
    CHECK_THROWS_AS(read_series_csv((dir / "absent.csv").string()), IoError);
}

TEST_CASE("json file round trip appends a trailing newline") {
    const fs::path dir = scratch("json");
    const nlohmann::json j = {{"a", 1}, {"b", {1, 2, 3}}};
    const std::string path = (dir / "x.json").string();
    write_json_file(j, path);
    CHECK(read_json_file(path) == j);
    const std::string text = slurp(path);
    CHECK(!text.empty());
    CHECK(text.back() == '\n');
}
