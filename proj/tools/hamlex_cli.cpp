// Command-line front end: pi, product, decide, construct, verify, oracle.
// Exit codes: 0 = yes/valid, 1 = no/invalid, 2 = input error,
// 3 = instance over a search limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamlex/decide.hpp"
#include "hamlex/dot.hpp"
#include "hamlex/graph.hpp"
#include "hamlex/linear_forest.hpp"
#include "hamlex/oracle.hpp"
#include "hamlex/product.hpp"
#include "hamlex/serialization.hpp"
#include "hamlex/verify.hpp"
#include "hamlex/witness_builder.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

hamlex::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    hamlex::json j;
    in >> j;
    return j;
}

hamlex::ProductVertex parse_product_vertex(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected layer:inner, got \"" + text + "\"");
    return hamlex::ProductVertex{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

hamlex::GraphProperty parse_property(const std::string& name) {
    if (name == "hamiltonian") return hamlex::GraphProperty::Hamiltonian;
    if (name == "traceable") return hamlex::GraphProperty::Traceable;
    if (name == "ham-connected") return hamlex::GraphProperty::HamConnected;
    throw std::invalid_argument("unknown property: " + name);
}

int cmd_pi(const std::string& file) {
    const hamlex::SimpleGraph g = hamlex::graph_from_json(load_json(file));
    const hamlex::LinearForest forest = hamlex::max_linear_forest(g);
    std::cout << "pi = " << forest.edge_count() << "\n";
    std::cout << "forest: " << hamlex::forest_to_json(forest).dump() << "\n";
    return kExitYes;
}

int cmd_product(const std::string& file, const std::string& emit) {
    const hamlex::ProductSpec spec = hamlex::product_spec_from_json(load_json(file));
    if (emit == "dot") {
        hamlex::write_product_dot(std::cout, spec);
    } else {
        std::cout << hamlex::graph_to_json(hamlex::build_product(spec)).dump(2) << "\n";
    }
    return kExitYes;
}

int cmd_decide(const std::string& file, const std::string& property) {
    const hamlex::ProductSpec spec = hamlex::product_spec_from_json(load_json(file));
    const hamlex::Decision d = hamlex::decide(spec, parse_property(property));
    std::cout << hamlex::decision_to_json(d).dump(2) << "\n";
    return d.verdict ? kExitYes : kExitNo;
}

int cmd_oracle(const std::string& file, const std::string& property) {
    const hamlex::ProductSpec spec = hamlex::product_spec_from_json(load_json(file));
    const hamlex::SimpleGraph product = hamlex::build_product(spec);
    bool verdict = false;
    switch (parse_property(property)) {
        case hamlex::GraphProperty::Hamiltonian: verdict = hamlex::brute_hamiltonian(product); break;
        case hamlex::GraphProperty::Traceable: verdict = hamlex::brute_traceable(product); break;
        case hamlex::GraphProperty::HamConnected: verdict = hamlex::brute_ham_connected(product); break;
    }
    hamlex::json out{{"verdict", verdict},
                     {"ledger", hamlex::json::array()},
                     {"citation", "exhaustive search over the materialized product"}};
    std::cout << out.dump(2) << "\n";
    return verdict ? kExitYes : kExitNo;
}

int cmd_oracle_diff(const std::string& dir, const std::string& property) {
    const hamlex::GraphProperty prop = parse_property(property);
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::invalid_argument("no .json files in " + dir);
    int disagreements = 0;
    std::cout << "file\tdecide\toracle\tagree\n";
    for (const auto& path : files) {
        const hamlex::ProductSpec spec = hamlex::product_spec_from_json(load_json(path.string()));
        const bool decided = hamlex::decide(spec, prop).verdict;
        const hamlex::SimpleGraph product = hamlex::build_product(spec);
        bool oracle = false;
        switch (prop) {
            case hamlex::GraphProperty::Hamiltonian: oracle = hamlex::brute_hamiltonian(product); break;
            case hamlex::GraphProperty::Traceable: oracle = hamlex::brute_traceable(product); break;
            case hamlex::GraphProperty::HamConnected: oracle = hamlex::brute_ham_connected(product); break;
        }
        const bool agree = decided == oracle;
        disagreements += agree ? 0 : 1;
        std::cout << path.filename().string() << "\t" << (decided ? "yes" : "no") << "\t"
                  << (oracle ? "yes" : "no") << "\t" << (agree ? "yes" : "NO") << "\n";
    }
    std::cout << "disagreements: " << disagreements << "\n";
    return disagreements == 0 ? kExitYes : kExitNo;
}

int cmd_construct(const std::string& file, const std::string& goal_name, const std::string& x_text,
                  const std::string& y_text, const std::string& emit, bool dump_multiple) {
    const hamlex::ProductSpec spec = hamlex::product_spec_from_json(load_json(file));
    hamlex::WalkGoal goal;
    if (goal_name == "cycle")
        goal = hamlex::WalkGoal::Cycle;
    else if (goal_name == "path")
        goal = hamlex::WalkGoal::Path;
    else if (goal_name == "xy-path")
        goal = hamlex::WalkGoal::XYPath;
    else
        throw std::invalid_argument("unknown goal: " + goal_name);
    std::optional<hamlex::ProductVertex> x, y;
    if (!x_text.empty()) x = parse_product_vertex(x_text);
    if (!y_text.empty()) y = parse_product_vertex(y_text);
    const hamlex::ConstructResult result = hamlex::construct(spec, goal, x, y);
    if (!result.feasible) {
        std::cout << hamlex::decision_to_json(result.decision).dump(2) << "\n";
        return kExitNo;
    }
    if (dump_multiple)
        std::cerr << hamlex::multiple_to_json(*result.multiple).dump() << "\n";
    if (emit == "dot") {
        hamlex::write_product_dot(std::cout, spec, &*result.walk);
    } else {
        std::cout << hamlex::walk_to_json(*result.walk).dump(2) << "\n";
    }
    return kExitYes;
}

int cmd_verify(const std::string& spec_file, const std::string& witness_file,
               const std::string& x_text, const std::string& y_text) {
    const hamlex::ProductSpec spec = hamlex::product_spec_from_json(load_json(spec_file));
    const hamlex::ProductWalk walk = hamlex::walk_from_json(load_json(witness_file));
    const hamlex::SimpleGraph product = hamlex::build_product(spec);
    hamlex::VerifyResult result;
    if (walk.closed) {
        result = hamlex::verify_ham_cycle(product, spec.layer_order(), walk);
    } else {
        if (walk.vertices.empty()) {
            std::cout << "{\"ok\": false, \"code\": \"walk_empty\", \"index\": 0}\n";
            return kExitNo;
        }
        const hamlex::ProductVertex x =
            x_text.empty() ? walk.vertices.front() : parse_product_vertex(x_text);
        const hamlex::ProductVertex y =
            y_text.empty() ? walk.vertices.back() : parse_product_vertex(y_text);
        result = hamlex::verify_ham_path(product, spec.layer_order(), walk, x, y);
    }
    if (result.ok) {
        std::cout << "{\"ok\": true}\n";
        return kExitYes;
    }
    hamlex::json out{{"ok", false},
                     {"code", hamlex::violation_code_name(result.violation.code)},
                     {"index", result.violation.index}};
    std::cout << out.dump() << "\n";
    return kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonicity of path products of graphs: decide, construct, verify"};
    app.require_subcommand(1);

    std::string file, witness, emit = "json", property = "hamiltonian", goal = "cycle";
    std::string x_text, y_text, diff_dir;
    bool dump_multiple = false;

    CLI::App* pi = app.add_subcommand("pi", "maximum spanning linear forest of a graph");
    pi->add_option("graph", file, "graph JSON file")->required();

    CLI::App* product = app.add_subcommand("product", "materialize a product");
    product->add_option("spec", file, "product spec JSON file")->required();
    product->add_option("--emit", emit, "json or dot");

    CLI::App* decide = app.add_subcommand("decide", "decide a product property");
    decide->add_option("spec", file, "product spec JSON file")->required();
    decide->add_option("--property", property, "hamiltonian, traceable or ham-connected")->required();

    CLI::App* construct = app.add_subcommand("construct", "build a witness walk");
    construct->add_option("spec", file, "product spec JSON file")->required();
    construct->add_option("--goal", goal, "cycle, path or xy-path")->required();
    construct->add_option("--x", x_text, "start vertex as layer:inner");
    construct->add_option("--y", y_text, "end vertex as layer:inner");
    construct->add_option("--emit", emit, "json or dot");
    construct->add_flag("--dump-multiple", dump_multiple, "dump the built multiple to stderr");

    CLI::App* verify = app.add_subcommand("verify", "check a witness walk");
    verify->add_option("spec", file, "product spec JSON file")->required();
    verify->add_option("witness", witness, "witness JSON file")->required();
    verify->add_option("--x", x_text, "expected start vertex");
    verify->add_option("--y", y_text, "expected end vertex");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    oracle->add_option("spec", file, "product spec JSON file");
    oracle->add_option("--property", property, "hamiltonian, traceable or ham-connected")->required();
    oracle->add_option("--diff", diff_dir, "compare decide against the oracle over a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitYes : kExitInput;
    }

    try {
        if (pi->parsed()) return cmd_pi(file);
        if (product->parsed()) return cmd_product(file, emit);
        if (decide->parsed()) return cmd_decide(file, property);
        if (construct->parsed()) return cmd_construct(file, goal, x_text, y_text, emit, dump_multiple);
        if (verify->parsed()) return cmd_verify(file, witness, x_text, y_text);
        if (oracle->parsed()) {
            if (!diff_dir.empty()) return cmd_oracle_diff(diff_dir, property);
            if (file.empty()) throw std::invalid_argument("oracle: need a spec file or --diff");
            return cmd_oracle(file, property);
        }
    } catch (const hamlex::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
