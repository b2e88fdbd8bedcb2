// dimer: exact counting of domino tilings on rectangles and tori.
//
// Every subcommand emits one JSON object per line on stdout; --pretty renders
// a small human-readable table instead. Exit codes: 0 success, 1 usage error,
// 2 computation error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dimer/asymptotics.hpp"
#include "dimer/codec.hpp"
#include "dimer/kasteleyn.hpp"
#include "dimer/oracle.hpp"
#include "dimer/spectral.hpp"
#include "dimer/verify.hpp"
#include "json.hpp"

using namespace dimer;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

bool pretty = false;
int threads = 0;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

void emit(const std::string& command, const json& parameters, const std::string& value,
          const std::string& method, long ms) {
    if (pretty) {
        std::cout << command;
        for (auto& [k, v] : parameters.items()) std::cout << "  " << k << "=" << v.dump();
        std::cout << "\n  value  " << value << "\n  method " << method << "\n  time   "
                  << ms << " ms\n";
        return;
    }
    json record{{"command", command},
                {"parameters", parameters},
                {"value", value},
                {"method", method},
                {"elapsed_ms", ms}};
    std::cout << record.dump() << "\n";
}

StubDirection parse_direction(const std::string& s) {
    if (s == "left") return StubDirection::Left;
    if (s == "right") return StubDirection::Right;
    if (s == "up") return StubDirection::Up;
    if (s == "down") return StubDirection::Down;
    throw CLI::ValidationError("direction must be left|right|up|down");
}

json matching_to_json(const Matching& mu) {
    json dominoes = json::array();
    for (int e : mu.edges) {
        const Edge& edge = mu.graph->edges[e];
        const Vertex& a = mu.graph->vertices[edge.a];
        const Vertex& b = mu.graph->vertices[edge.b];
        dominoes.push_back({{a.x, a.y}, {b.x, b.y}});
    }
    return dominoes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domino tiling counts: Kasteleyn determinants, spectral "
                 "products, and brute-force enumeration"};
    app.require_subcommand(1);
    app.fallthrough();  // let --pretty/--threads appear after the subcommand
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON lines");
    app.add_option("--threads", threads, "worker cap (default: DIMER_THREADS or hardware)");

    if (const char* env = std::getenv("DIMER_THREADS")) threads = std::atoi(env);

    int rows = 0, cols = 0;
    std::string method = "determinant";
    long precision_bits = 0;
    bool experimental = false;

    auto* count = app.add_subcommand("count", "count tilings of an m-by-n rectangle");
    count->add_option("--rows", rows)->required();
    count->add_option("--cols", cols)->required();
    count->add_option("--method", method)
        ->check(CLI::IsMember({"enumerate", "determinant", "spectral"}));
    count->add_option("--precision-bits", precision_bits, "spectral working precision");

    auto* torus = app.add_subcommand("torus", "count tilings of an m-by-n torus");
    torus->add_option("--rows", rows)->required();
    torus->add_option("--cols", cols)->required();
    torus->add_option("--method", method)
        ->check(CLI::IsMember({"enumerate", "determinant", "spectral"}));
    torus->add_option("--precision-bits", precision_bits);
    torus->add_flag("--experimental", experimental,
                    "allow even sides not divisible by 4 (cross-checked against "
                    "enumeration when small enough)");

    auto* over = app.add_subcommand("overtilings", "count boundary-straddling tilings N*");
    over->add_option("--rows", rows)->required();
    over->add_option("--cols", cols)->required();

    std::vector<std::string> stub_specs;
    auto* boundary =
        app.add_subcommand("boundary", "count completions of a boundary configuration");
    boundary->add_option("--rows", rows)->required();
    boundary->add_option("--cols", cols)->required();
    boundary->add_option("--stub", stub_specs, "stub as x,y,direction (repeatable)");

    std::string input_path, output_path;
    auto* enc = app.add_subcommand("encode", "encode a tiling (JSON dominoes) to a code file");
    enc->add_option("--rows", rows)->required();
    enc->add_option("--cols", cols)->required();
    enc->add_option("--input", input_path, "JSON tiling file")->required();
    enc->add_option("--output", output_path, "binary code file")->required();

    auto* dec = app.add_subcommand("decode", "decode a code file back to a tiling");
    dec->add_option("--input", input_path, "binary code file")->required();
    dec->add_option("--output", output_path, "JSON tiling file (default: stdout)");

    int max_n = 16;
    auto* entropy = app.add_subcommand("entropy", "finite-size entropy vs G/pi");
    entropy->add_option("--max-n", max_n);
    entropy->add_option("--precision-bits", precision_bits);

    auto* catalan = app.add_subcommand("catalan", "Catalan's constant");
    catalan->add_option("--precision-bits", precision_bits);

    int max_cells = 36;
    auto* verify = app.add_subcommand("verify", "run the oracle-equivalence suite");
    verify->add_option("--max-cells", max_cells);

    CLI11_PARSE(app, argc, argv);
    const auto start = Clock::now();

    try {
        if (count->parsed()) {
            json params{{"rows", rows}, {"cols", cols}};
            BigCount value;
            if (method == "enumerate")
                value = enumerate_matchings(build_grid({rows, cols, Topology::Rectangle}));
            else if (method == "determinant")
                value = count_rectangle_det(rows, cols);
            else
                value = count_rectangle_spectral(rows, cols, precision_bits);
            emit("count", params, value.get_str(), method, elapsed_ms(start));
        } else if (torus->parsed()) {
            json params{{"rows", rows}, {"cols", cols}, {"experimental", experimental}};
            BigCount value;
            if (method == "enumerate") {
                value = enumerate_matchings(build_grid({rows, cols, Topology::Torus}));
            } else {
                value = (method == "determinant")
                            ? count_torus_det(rows, cols, experimental, threads)
                            : count_torus_spectral(rows, cols, precision_bits, experimental);
                if (experimental && rows * cols <= EnumerationLimits{}.max_torus_cells &&
                    value != torus_typed_counts(rows, cols).total())
                    throw SignCalibrationFailure(
                        "experimental torus combination disagrees with enumeration");
            }
            emit("torus", params, value.get_str(), method, elapsed_ms(start));
        } else if (over->parsed()) {
            const BigCount value = count_overtilings(rows, cols);
            emit("overtilings", {{"rows", rows}, {"cols", cols}}, value.get_str(),
                 "enumerate", elapsed_ms(start));
        } else if (boundary->parsed()) {
            BoundaryConfiguration config;
            for (const std::string& spec : stub_specs) {
                const auto c1 = spec.find(','), c2 = spec.find(',', spec.find(',') + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw CLI::ValidationError("stub must be x,y,direction");
                config.stubs.push_back({std::stoi(spec.substr(0, c1)),
                                        std::stoi(spec.substr(c1 + 1, c2 - c1 - 1)),
                                        parse_direction(spec.substr(c2 + 1))});
            }
            const BigCount value = count_with_boundary(rows, cols, config);
            emit("boundary",
                 {{"rows", rows}, {"cols", cols}, {"stubs", json(stub_specs)}},
                 value.get_str(), "enumerate", elapsed_ms(start));
        } else if (enc->parsed()) {
            std::ifstream in(input_path);
            if (!in) throw Error("cannot open " + input_path);
            const json tiling = json::parse(in);
            Graph g = build_grid({rows, cols, Topology::Rectangle});
            Matching mu{&g, {}};
            for (const auto& domino : tiling) {
                const int ax = domino[0][0], ay = domino[0][1];
                const int bx = domino[1][0], by = domino[1][1];
                const int a = g.vertex_id(ax, ay);
                bool found = false;
                for (int e : g.incident[a]) {
                    const Edge& edge = g.edges[e];
                    const int other = edge.a == a ? edge.b : edge.a;
                    if (g.vertices[other].x == bx && g.vertices[other].y == by) {
                        mu.edges.push_back(e);
                        found = true;
                        break;
                    }
                }
                if (!found) throw Error("cells are not adjacent: " + domino.dump());
            }
            const auto bytes = code_to_bytes(encode(mu));
            std::ofstream out(output_path, std::ios::binary);
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
            emit("encode", {{"rows", rows}, {"cols", cols}, {"output", output_path}},
                 std::to_string(bytes.size()) + " bytes", "codec", elapsed_ms(start));
        } else if (dec->parsed()) {
            std::ifstream in(input_path, std::ios::binary);
            if (!in) throw Error("cannot open " + input_path);
            std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                            std::istreambuf_iterator<char>()};
            const TilingCode code = code_from_bytes(bytes);
            Graph g = build_grid({code.rows, code.cols, Topology::Rectangle});
            const json tiling = matching_to_json(decode(code, g));
            if (output_path.empty()) {
                std::cout << tiling.dump() << "\n";
            } else {
                std::ofstream out(output_path);
                out << tiling.dump() << "\n";
                emit("decode", {{"rows", code.rows}, {"cols", code.cols}},
                     output_path, "codec", elapsed_ms(start));
            }
        } else if (entropy->parsed()) {
            const auto reports = finite_size_entropy(max_n, precision_bits);
            for (const EntropyReport& r : reports) {
                json params{{"n", r.n}, {"target", r.target.str(20)}};
                emit("entropy", params, r.per_site_log.str(20),
                     "spectral-double-sum", elapsed_ms(start));
            }
        } else if (catalan->parsed()) {
            const long prec = precision_bits > 0 ? precision_bits : 128;
            const HPReal g = catalan_constant(prec);
            emit("catalan", {{"precision_bits", prec}},
                 g.str(static_cast<int>(prec / 3.32) + 1), "accelerated-series",
                 elapsed_ms(start));
        } else if (verify->parsed()) {
            bool all_ok = true;
            for (const VerifyResult& r : run_verification(max_cells, threads)) {
                if (pretty) {
                    std::cout << (r.passed ? "pass  " : "FAIL  ") << r.invariant
                              << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
                } else {
                    json line{{"command", "verify"},
                              {"invariant", r.invariant},
                              {"status", r.passed ? "pass" : "fail"}};
                    if (!r.detail.empty()) line["detail"] = r.detail;
                    std::cout << line.dump() << "\n";
                }
                all_ok = all_ok && r.passed;
            }
            if (!all_ok) return 2;
        }
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
