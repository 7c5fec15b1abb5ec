// Command-line front end: verification, reduction, search, lifting, and
// parsing as reproducible batch runs. Exit codes: 0 all checks pass,
// 1 mathematical failure, 2 operational failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cuboid/cuboid_system.hpp"
#include "cuboid/parse.hpp"
#include "cuboid/reduction.hpp"
#include "cuboid/report.hpp"
#include "cuboid/search.hpp"

#include <nlohmann/json.hpp>

namespace {

using namespace cuboid;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitOperational = 2;

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buffer;

    int flush() {
        if (path.empty()) {
            std::cout << buffer.str();
            return kExitPass;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file '" << path << "'\n";
            return kExitOperational;
        }
        out << buffer.str();
        return out ? kExitPass : kExitOperational;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

unsigned default_shards() {
    if (const char* env = std::getenv("CUBOID_SHARDS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

int emit_report(const VerificationReport& report, Output& out) {
    out.buffer << report.to_json() << "\n";
    const int io = out.flush();
    if (io != kExitPass) return io;
    return report.passed() ? kExitPass : kExitMathFailure;
}

std::string lift_to_json(const LiftResult& lift) {
    ordered_json j;
    ordered_json rational = ordered_json::object();
    ordered_json integer = ordered_json::object();
    for (const auto& v : el_ring()->variables()) {
        rational[v] = to_string(lift.rational_point.at(v));
        integer[v] = lift.integer_point.at(v).str();
    }
    j["rational"] = std::move(rational);
    j["alpha"] = lift.scale_alpha.str();
    j["integer"] = std::move(integer);
    return j.dump();
}

int cmd_verify(const std::string& suite, const std::string& corpus_path, Output& out) {
    if (!corpus_path.empty()) {
        // external corpus: re-run kernel membership against it
        DefinitionSet defs = load_kernel_corpus_from(read_file(corpus_path), corpus_path);
        return emit_report(verify_kernel_membership_of(defs), out);
    }
    VerificationReport report;
    if (suite == "s3")
        report = verify_s3_invariance();
    else if (suite == "factor")
        report = verify_factor_expansions();
    else if (suite == "eform")
        report = verify_eform();
    else if (suite == "kernel")
        report = verify_kernel_membership();
    else
        report = verify_all();
    return emit_report(report, out);
}

int cmd_reduce(Resolvent which, bool emit_equations, bool annihilation_only, Output& out) {
    if (emit_equations) {
        const auto& d = DerivedEquations::instance();
        out.buffer << "linear_a:=" << render(d.linear_a) << ";\n"
                   << "linear_b:=" << render(d.linear_b) << ";\n"
                   << "biquadratic:=" << render(d.biquadratic) << ";\n"
                   << "sextic:=" << render(d.sextic) << ";\n";
        return out.flush();
    }
    return emit_report(annihilation_only ? verify_annihilation(which) : reduce_report(which),
                       out);
}

int cmd_search(std::int64_t bound, SearchOptions options, bool with_lift, Output& out) {
    search(bound, options, [&](const SolutionRecord& r) {
        out.buffer << r.to_jsonl() << "\n";
        if (with_lift && (r.e10 != 0 || r.e01 != 0))
            out.buffer << lift_to_json(lift_solution(Rational(r.e10), Rational(r.e01),
                                                     Rational(r.e11), Rational(r.l)))
                       << "\n";
    });
    return out.flush();
}

int cmd_heron(std::int64_t bound, Output& out) {
    heron_search(bound, [&](const HeronRecord& r) { out.buffer << r.to_jsonl() << "\n"; });
    return out.flush();
}

Rational json_rational(const nlohmann::json& v, const char* key) {
    if (!v.contains(key)) throw std::runtime_error(std::string("missing field '") + key + "'");
    const auto& f = v.at(key);
    if (f.is_string()) return rational_from_string(f.get<std::string>());
    if (f.is_number_integer()) return Rational(f.get<long long>());
    throw std::runtime_error(std::string("field '") + key + "' must be an integer or \"num/den\"");
}

int cmd_lift(const std::string& input_path, Output& out) {
    std::string text = input_path == "-"
                           ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                           : read_file(input_path);
    nlohmann::json j = nlohmann::json::parse(text);
    LiftResult lift;
    try {
        lift = lift_solution(json_rational(j, "e10"), json_rational(j, "e01"),
                             json_rational(j, "e11"), json_rational(j, "l"));
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitMathFailure;
    }
    out.buffer << lift_to_json(lift) << "\n";
    return out.flush();
}

int cmd_parse(const std::string& path, const std::string& ring_name, bool stats, Output& out) {
    const RingPtr& ring = ring_name == "MQL" ? mql_ring() : el_ring();
    std::string text = read_file(path);
    DefinitionSet defs;
    try {
        defs = parse_definitions(text, ring, path);
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitMathFailure;
    }
    for (const auto& [name, p] : defs.entries) {
        out.buffer << name << ":=" << render(p) << ";\n";
        if (stats) {
            out.buffer << "# " << name << ": terms=" << p.term_count()
                       << " degree=" << p.total_degree();
            if (same_ring(ring, el_ring())) {
                auto g = weighted_degree(p, WeightSystem::el_weights());
                out.buffer << " weighted-degree=";
                if (g.kind == GradeResult::Kind::homogeneous)
                    out.buffer << g.degree;
                else
                    out.buffer << (g.kind == GradeResult::Kind::zero ? "zero" : "mixed");
            }
            out.buffer << "\n";
        }
    }
    return out.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and integer search for the perfect-cuboid factor system"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    std::string suite = "all", corpus_path, convention = "derived";
    std::string input_path, parse_ring = "EL";
    std::int64_t bound = 0;
    bool emit_equations = false, with_lift = false, stats = false;
    SearchOptions options;
    options.shards = default_shards();

    auto* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--suite", suite, "s3 | factor | eform | kernel | all")
        ->check(CLI::IsMember({"s3", "factor", "eform", "kernel", "all"}));
    verify->add_option("--corpus", corpus_path,
                       "kernel corpus file overriding the embedded one");

    auto* reduce = app.add_subcommand("reduce", "run the full reduction pipeline");
    reduce->add_option("--convention", convention,
                       "resolvent for stage-2 elimination: derived | transcribed")
        ->check(CLI::IsMember({"derived", "transcribed", "paper"}));
    reduce->add_flag("--emit-equations", emit_equations,
                     "print the four derived equations and exit");

    auto* theorem51 = app.add_subcommand("theorem51", "run only the annihilation checks");
    theorem51->add_option("--convention", convention,
                          "resolvent for stage-2 elimination: derived | transcribed")
        ->check(CLI::IsMember({"derived", "transcribed", "paper"}));

    auto* search_cmd = app.add_subcommand("search", "enumerate biquadratic solutions");
    search_cmd->add_option("--bound", bound, "coordinate bound (>= 1)")->required();
    search_cmd->add_flag("--positive", options.positive_only, "only all-positive records");
    search_cmd->add_flag("--primitive", options.primitive_only, "only primitive records");
    search_cmd->add_option("--shards", options.shards, "concurrent grid shards");
    search_cmd->add_flag("--lift", with_lift, "emit a lift line after each liftable record");

    auto* lift = app.add_subcommand("lift", "lift a biquadratic solution to all 22 equations");
    lift->add_option("--in", input_path, "JSON file with e10, e01, e11, l ('-' for stdin)")
        ->required();

    auto* heron = app.add_subcommand("heron", "enumerate Heron triangles");
    heron->add_option("--bound", bound, "side bound (>= 1)")->required();

    auto* parse = app.add_subcommand("parse", "parse definitions and print canonical forms");
    parse->add_option("file", input_path, "input .poly file")->required();
    parse->add_option("--ring", parse_ring, "MQL | EL")
        ->check(CLI::IsMember({"MQL", "EL"}));
    parse->add_flag("--stats", stats, "print term count and degrees per definition");

    CLI11_PARSE(app, argc, argv);

    const Resolvent which =
        convention == "derived" ? Resolvent::derived : Resolvent::transcribed;

    try {
        if (verify->parsed()) return cmd_verify(suite, corpus_path, out);
        if (reduce->parsed()) return cmd_reduce(which, emit_equations, false, out);
        if (theorem51->parsed()) return cmd_reduce(which, false, true, out);
        if (search_cmd->parsed()) return cmd_search(bound, options, with_lift, out);
        if (lift->parsed()) return cmd_lift(input_path, out);
        if (heron->parsed()) return cmd_heron(bound, out);
        if (parse->parsed()) return cmd_parse(input_path, parse_ring, stats, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitOperational;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitOperational;
    }
    return kExitOperational;
}
