#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hamlex/serialization.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace hamlex;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "hamlex-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const fs::path out_path = scratch_dir() / "stdout.txt";
    const fs::path err_path = scratch_dir() / "stderr.txt";
    const std::string cmd = (env.empty() ? "" : env + " ") + std::string(HAMLEX_CLI_PATH) + " " +
                            args + " > " + out_path.string() + " 2> " + err_path.string();
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::ifstream err_in(err_path);
    std::stringstream err_buffer;
    err_buffer << err_in.rdbuf();
    return RunResult{WEXITSTATUS(raw), buffer.str(), err_buffer.str()};
}

std::string uniform_spec_json(int m, const SimpleGraph& layer) {
    return json{{"m", m}, {"layer", graph_to_json(layer)}}.dump();
}

}  // namespace

TEST_CASE("pi subcommand") {
    const fs::path file = write_file("h.json", graph_to_json(testing::p3_plus_3k1()).dump());
    const RunResult r = run_cli("pi " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pi = 2") != std::string::npos);

    const fs::path edgeless = write_file("edgeless.json", graph_to_json(empty_graph(4)).dump());
    const RunResult r2 = run_cli("pi " + edgeless.string());
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("pi = 0") != std::string::npos);

    const fs::path big = write_file("big.json", graph_to_json(complete_graph(30)).dump());
    CHECK(run_cli("pi " + big.string()).exit_code == 3);

    const fs::path broken = write_file("broken.json", "{\"n\": }");
    CHECK(run_cli("pi " + broken.string()).exit_code == 2);
    CHECK(run_cli("pi " + (scratch_dir() / "missing.json").string()).exit_code == 2);
}

TEST_CASE("usage errors exit with the input-error code") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("decide").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    const fs::path file = write_file("usage.json", uniform_spec_json(3, complete_graph(2)));
    CHECK(run_cli("construct " + file.string() + " --goal=xy-path --x nonsense --y 1:0").exit_code == 2);
    CHECK(run_cli("construct " + file.string() + " --goal=bogus").exit_code == 2);
}

TEST_CASE("the exact-search limit follows the environment") {
    const fs::path path26 = write_file("p26.json", graph_to_json(path_graph(26)).dump());
    CHECK(run_cli("pi " + path26.string()).exit_code == 3);
    const RunResult raised = run_cli("pi " + path26.string(), "HAMLEX_PI_LIMIT=28");
    CHECK(raised.exit_code == 0);
    CHECK(raised.out.find("pi = 25") != std::string::npos);
    CHECK(run_cli("pi " + path26.string(), "HAMLEX_PI_LIMIT=10").exit_code == 3);
}

TEST_CASE("decide subcommand on the flagship instance") {
    const fs::path p3 = write_file("p3.json", uniform_spec_json(3, testing::p3_plus_3k1()));
    const fs::path p5 = write_file("p5.json", uniform_spec_json(5, testing::p3_plus_3k1()));
    const fs::path p6 = write_file("p6.json", uniform_spec_json(6, testing::p3_plus_3k1()));

    const RunResult no = run_cli("decide " + p3.string() + " --property=hamiltonian");
    CHECK(no.exit_code == 1);
    const json no_json = json::parse(no.out);
    CHECK(no_json["verdict"] == false);
    bool found_bound = false;
    for (const auto& row : no_json["ledger"])
        if (row["required"] == 6 && row["actual"] == 4) found_bound = true;
    CHECK(found_bound);

    CHECK(run_cli("decide " + p5.string() + " --property=hamiltonian").exit_code == 0);
    CHECK(run_cli("decide " + p6.string() + " --property=traceable").exit_code == 0);
    CHECK(run_cli("decide " + p3.string() + " --property=bogus").exit_code == 2);
}

TEST_CASE("construct, verify and the round trip") {
    const fs::path p5 = write_file("c5.json", uniform_spec_json(5, testing::p3_plus_3k1()));
    const RunResult built = run_cli("construct " + p5.string() + " --goal=cycle");
    REQUIRE(built.exit_code == 0);
    const fs::path witness = write_file("w5.json", built.out);
    CHECK(run_cli("verify " + p5.string() + " " + witness.string()).exit_code == 0);

    // corrupt one vertex: swap the first two entries of the walk
    json bad = json::parse(built.out);
    std::swap(bad["walk"][0], bad["walk"][1]);
    const fs::path corrupted = write_file("w5bad.json", bad.dump());
    const RunResult rejected = run_cli("verify " + p5.string() + " " + corrupted.string());
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.out.find("\"code\"") != std::string::npos);

    const fs::path p3 = write_file("c3.json", uniform_spec_json(3, testing::p3_plus_3k1()));
    const RunResult refused = run_cli("construct " + p3.string() + " --goal=cycle");
    CHECK(refused.exit_code == 1);
    CHECK(json::parse(refused.out)["verdict"] == false);

    const fs::path k2 = write_file("k2.json", uniform_spec_json(4, complete_graph(2)));
    const RunResult xy = run_cli("construct " + k2.string() + " --goal=xy-path --x 2:0 --y 3:1");
    REQUIRE(xy.exit_code == 0);
    const fs::path xyw = write_file("xyw.json", xy.out);
    CHECK(run_cli("verify " + k2.string() + " " + xyw.string() + " --x 2:0 --y 3:1").exit_code == 0);
    CHECK(run_cli("verify " + k2.string() + " " + xyw.string() + " --x 2:0 --y 4:1").exit_code == 1);

    const RunResult dumped =
        run_cli("construct " + k2.string() + " --goal=xy-path --x 2:0 --y 3:1 --dump-multiple");
    CHECK(dumped.exit_code == 0);
    const json multiple = json::parse(dumped.err);
    CHECK(multiple["mult"] == json::parse("[2,1,2]"));
    CHECK(multiple["loops"] == json::parse("[1,0,0,1]"));
}

TEST_CASE("dot output highlights the walk") {
    const fs::path p5 = write_file("d5.json", uniform_spec_json(5, testing::p3_plus_3k1()));
    const RunResult dot = run_cli("construct " + p5.string() + " --goal=cycle --emit=dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph product {") != std::string::npos);
    CHECK(dot.out.find("penwidth") != std::string::npos);
    CHECK(dot.out.find("cluster_5") != std::string::npos);

    const RunResult plain = run_cli("product " + p5.string() + " --emit=dot");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("penwidth") == std::string::npos);
}

TEST_CASE("product subcommand emits the flat graph") {
    const fs::path p5 = write_file("g5.json", uniform_spec_json(5, testing::p3_plus_3k1()));
    const RunResult r = run_cli("product " + p5.string());
    REQUIRE(r.exit_code == 0);
    const json graph = json::parse(r.out);
    CHECK(graph["n"] == 30);
    CHECK(graph["edges"].size() == 154);
}

TEST_CASE("oracle subcommand and the diff table") {
    const fs::path p3 = write_file("o3.json", uniform_spec_json(3, testing::p3_plus_3k1()));
    const RunResult r = run_cli("oracle " + p3.string() + " --property=traceable");
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out)["verdict"] == false);

    const fs::path corpus = scratch_dir() / "corpus";
    fs::create_directories(corpus);
    std::ofstream(corpus / "a.json") << uniform_spec_json(3, testing::p3_plus_3k1());
    std::ofstream(corpus / "b.json") << uniform_spec_json(5, testing::p3_plus_3k1());
    std::ofstream(corpus / "c.json") << uniform_spec_json(2, empty_graph(2));
    std::ofstream(corpus / "d.json") << uniform_spec_json(4, path_graph(3));
    const RunResult diff = run_cli("oracle --diff " + corpus.string() + " --property=hamiltonian");
    CHECK(diff.exit_code == 0);
    CHECK(diff.out.find("disagreements: 0") != std::string::npos);
}
