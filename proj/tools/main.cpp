// Command-line frontend: classification, satisfiability, the QBF encoder, and
// the graph utilities, all speaking the JSON model format.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hornmodal/classify.hpp"
#include "hornmodal/closure.hpp"
#include "hornmodal/errors.hpp"
#include "hornmodal/json_io.hpp"
#include "hornmodal/morphism.hpp"
#include "hornmodal/oracle.hpp"
#include "hornmodal/parser.hpp"
#include "hornmodal/qbf.hpp"
#include "hornmodal/shrink.hpp"
#include "hornmodal/tableau.hpp"

namespace {

// Exit codes, stable across releases:
//   classify: 0 NP-complete, 1 PSPACE-hard
//   sat:      10 satisfiable, 20 unsatisfiable (within bound or outright)
//   shared:   0 success (other commands), 2 parse/input error,
//             30 bounds or resources exhausted / unsupported logic
constexpr int kExitNp = 0;
constexpr int kExitPspace = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitExhausted = 30;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json read_json_file(const std::string& path) {
    return nlohmann::json::parse(read_file(path));
}

struct Output {
    std::string format = "json";

    void emit(const nlohmann::json& j, const std::string& text) const {
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

hornmodal::HornFormula load_logic(const std::string& path) {
    return hornmodal::parse_horn(read_file(path));
}

hornmodal::FormulaPtr load_formula(const std::string& file, const std::string& inline_text) {
    if (!inline_text.empty()) return hornmodal::parse_modal(inline_text);
    return hornmodal::parse_modal(read_file(file));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for modal logics over Horn frame conditions"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("HORNMODAL_FORMAT");

    hornmodal::Bounds bounds;
    app.add_option("--tree-nodes", bounds.tree_nodes, "tree search bound (0 = derived)")
        ->envname("HORNMODAL_TREE_NODES");
    app.add_option("--line-len", bounds.line_len, "line search bound (0 = derived)")
        ->envname("HORNMODAL_LINE_LEN");
    app.add_option("--trans-cap", bounds.trans_cap, "largest tracked transitivity degree")
        ->envname("HORNMODAL_TRANS_CAP");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a Horn frame formula");
    std::string classify_logic;
    classify_cmd->add_option("--logic", classify_logic, "Horn formula file")->required();

    // sat
    auto* sat_cmd = app.add_subcommand("sat", "decide satisfiability");
    std::string sat_logic, sat_formula_file, sat_formula_inline, sat_engine = "oracle";
    int max_worlds = 5;
    int trusted_bound = 0;
    bool window = false;
    sat_cmd->add_option("--logic", sat_logic, "Horn formula file")->required();
    sat_cmd->add_option("--formula", sat_formula_file, "modal formula file");
    sat_cmd->add_option("--formula-inline", sat_formula_inline, "modal formula text");
    sat_cmd->add_option("--engine", sat_engine, "oracle or tableau")
        ->check(CLI::IsMember({"oracle", "tableau"}))
        ->envname("HORNMODAL_ENGINE");
    sat_cmd->add_option("--max-worlds", max_worlds, "oracle model size bound")
        ->envname("HORNMODAL_MAX_WORLDS");
    sat_cmd->add_option("--trusted-bound", trusted_bound,
                        "treat this oracle bound as complete (emit unsat, not "
                        "unsat-within-bound)");
    sat_cmd->add_flag("--window", window, "tableau: sliding clause-check window");

    // qbf2modal
    auto* qbf_cmd = app.add_subcommand("qbf2modal", "encode a QBF as a modal formula");
    std::string qbf_text;
    qbf_cmd->add_option("--qbf", qbf_text, "QBF, e.g. \"Ap Eq : (p&q)|(~p&~q)\"")->required();

    // closure
    auto* closure_cmd = app.add_subcommand("closure", "close a graph under frame conditions");
    std::string closure_types, closure_graph;
    closure_cmd->add_option("--types", closure_types, "conditions, e.g. refl,symm,trans2")
        ->required();
    closure_cmd->add_option("--graph", closure_graph, "graph/model JSON file")->required();

    // shrink
    auto* shrink_cmd = app.add_subcommand("shrink", "restrict a model, preserving a formula");
    std::string shrink_graph, shrink_formula_file, shrink_formula_inline;
    int shrink_world = -1;
    shrink_cmd->add_option("--graph", shrink_graph, "model JSON file")->required();
    shrink_cmd->add_option("--formula", shrink_formula_file, "modal formula file");
    shrink_cmd->add_option("--formula-inline", shrink_formula_inline, "modal formula text");
    shrink_cmd->add_option("--world", shrink_world, "world (default: model root)");

    // unravel
    auto* unravel_cmd = app.add_subcommand("unravel", "unravel a model into a tree");
    std::string unravel_graph;
    int unravel_depth = 0;
    int unravel_world = -1;
    unravel_cmd->add_option("--graph", unravel_graph, "model JSON file")->required();
    unravel_cmd->add_option("--depth", unravel_depth, "unraveling depth")->required();
    unravel_cmd->add_option("--world", unravel_world, "start world (default: model root)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify_cmd) {
            auto psi = load_logic(classify_logic);
            auto outcome = hornmodal::classify(psi, bounds);
            std::string text = "verdict: ";
            text += outcome.verdict == hornmodal::Verdict::NpComplete ? "NP-complete"
                                                                      : "PSPACE-hard";
            text += "\ntypes-list: " + hornmodal::to_string(outcome.types) + "\n";
            for (const auto& step : outcome.trace) {
                text += "  clause " + std::to_string(step.clause_index) + ": " +
                        hornmodal::to_string(step.kind);
                if (step.kind == hornmodal::StepCase::Transitive)
                    text += " k=" + std::to_string(step.k);
                text += "\n";
            }
            out.emit(hornmodal::classification_to_json(outcome), text);
            return outcome.verdict == hornmodal::Verdict::NpComplete ? kExitNp : kExitPspace;
        }

        if (*sat_cmd) {
            auto psi = load_logic(sat_logic);
            auto phi = load_formula(sat_formula_file, sat_formula_inline);
            hornmodal::SatResult result;
            if (sat_engine == "oracle") {
                hornmodal::OracleOptions oo;
                int bound = max_worlds;
                if (trusted_bound > 0) {
                    oo.trusted_bound = true;
                    bound = trusted_bound;
                }
                result = hornmodal::sat_oracle(psi, phi, bound, oo);
            } else {
                hornmodal::TableauOptions to;
                to.window = window;
                result = hornmodal::sat_tableau(psi, phi, to);
            }
            std::string text;
            switch (result.status) {
            case hornmodal::SatStatus::Sat: text = "satisfiable\n"; break;
            case hornmodal::SatStatus::Unsat: text = "unsatisfiable\n"; break;
            case hornmodal::SatStatus::UnsatWithinBound:
                text = "unsatisfiable within " + std::to_string(result.bound) + " worlds\n";
                break;
            }
            out.emit(hornmodal::sat_result_to_json(result), text);
            return result.status == hornmodal::SatStatus::Sat ? kExitSat : kExitUnsat;
        }

        if (*qbf_cmd) {
            auto q = hornmodal::parse_qbf(qbf_text);
            auto phi = hornmodal::qbf_to_modal(q);
            nlohmann::json j;
            j["formula"] = hornmodal::to_string(phi);
            j["nodes"] = hornmodal::node_count(phi);
            out.emit(j, hornmodal::to_string(phi) + "\n");
            return 0;
        }

        if (*closure_cmd) {
            auto t = hornmodal::parse_types_list(closure_types);
            auto m = hornmodal::model_from_json(read_json_file(closure_graph));
            m.graph = hornmodal::closure(m.graph, t);
            out.emit(hornmodal::model_to_json(m), "");
            if (out.format == "text") {
                for (auto [u, v] : m.graph.edges())
                    std::cout << u << " -> " << v << "\n";
            }
            return 0;
        }

        if (*shrink_cmd) {
            auto m = hornmodal::model_from_json(read_json_file(shrink_graph));
            auto phi = load_formula(shrink_formula_file, shrink_formula_inline);
            int w = shrink_world >= 0 ? shrink_world : m.root.value_or(0);
            auto result = hornmodal::shrink(m, w, phi);
            nlohmann::json j;
            j["model"] = hornmodal::model_to_json(result.model);
            j["worlds"] = result.worlds;
            out.emit(j, "kept " + std::to_string(result.worlds.size()) + " worlds\n");
            return 0;
        }

        if (*unravel_cmd) {
            auto m = hornmodal::model_from_json(read_json_file(unravel_graph));
            int w = unravel_world >= 0 ? unravel_world : m.root.value_or(0);
            auto result = hornmodal::unravel(m, w, unravel_depth);
            out.emit(hornmodal::unravel_to_json(result),
                     "tree with " + std::to_string(result.morphism.source.graph.size()) +
                         " nodes\n");
            return 0;
        }
    } catch (const hornmodal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const hornmodal::BoundsExhaustedError& e) {
        std::cerr << "bounds exhausted: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const hornmodal::ResourceExhaustedError& e) {
        std::cerr << "resources exhausted: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const hornmodal::UnsupportedLogicError& e) {
        std::cerr << "unsupported logic: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
