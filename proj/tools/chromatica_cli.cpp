// Command-line front end: family construction, engine and basis selection,
// report emission. Exit codes: 0 success, 1 verification failure, 2 usage
// error.
#include "chromatica/analysis.hpp"
#include "chromatica/chromatic.hpp"
#include "chromatica/errors.hpp"
#include "chromatica/json_io.hpp"
#include "chromatica/selftest.hpp"
#include "chromatica/tableaux.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chromatica;

struct GlobalConfig {
    int vertex_cap = 10;
    int edge_cap = 24;
    std::string format = "text";
    std::uint64_t seed = 20240915;

    ChromaticCaps chromatic_caps() const { return {vertex_cap, edge_cap}; }
    TableauxCaps tableaux_caps() const { return {vertex_cap}; }
    bool json() const { return format == "json"; }
};

struct FamilyOptions {
    std::string family;
    int n = 0;
    std::string legs;
    std::string m;
    std::string graph_file;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

Graph load_graph(const FamilyOptions& opt) {
    if (!opt.graph_file.empty()) {
        Json j;
        if (opt.graph_file == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(opt.graph_file);
            if (!in)
                throw std::invalid_argument("cannot open graph file: " + opt.graph_file);
            in >> j;
        }
        return graph_from_json(j);
    }
    if (opt.family == "complete")
        return complete(opt.n);
    if (opt.family == "path")
        return path(opt.n);
    if (opt.family == "net")
        return generalized_net(opt.n);
    if (opt.family == "gspider")
        return generalized_spider(opt.n, parse_int_list(opt.legs));
    if (opt.family == "spider")
        return spider(parse_int_list(opt.legs));
    if (opt.family == "nuig" || opt.family == "hcrab") {
        IntervalSeq seq = IntervalSeq::parse(opt.m);
        if (opt.family == "hcrab" && seq.values().front() != 2)
            throw invalid_family_error("horseshoe crab sequences start with 2");
        return nuig(seq);
    }
    throw std::invalid_argument("unknown family '" + opt.family +
                                "' (complete|path|net|gspider|spider|nuig|hcrab)");
}

void add_family_options(CLI::App* cmd, FamilyOptions& opt, bool allow_file) {
    cmd->add_option("--family", opt.family,
                    "graph family: complete|path|net|gspider|spider|nuig|hcrab");
    cmd->add_option("--n", opt.n, "vertex or body-size parameter");
    cmd->add_option("--legs", opt.legs, "comma-separated leg lengths");
    cmd->add_option("--m", opt.m, "interval sequence, e.g. 2,4,6,8,8,8,8");
    if (allow_file)
        cmd->add_option("--graph", opt.graph_file, "edge-list JSON file ('-' for stdin)");
}

void emit(const GlobalConfig& config, const std::string& command, const Json& input,
          const Json& result, const std::string& text_form) {
    if (config.json()) {
        Json out;
        out["command"] = command;
        out["input"] = input;
        out["result"] = result;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text_form << "\n";
    }
}

int run(int argc, char** argv) {
    GlobalConfig config;
    if (const char* env_cap = std::getenv("CHROMATICA_MAX_N"))
        config.vertex_cap = std::atoi(env_cap);

    CLI::App app{"exact chromatic symmetric function toolkit"};
    app.require_subcommand(1);
    app.add_option("--max-n", config.vertex_cap, "vertex enumeration cap")
        ->capture_default_str();
    app.add_option("--max-edges", config.edge_cap, "edge-subset enumeration cap")
        ->capture_default_str();
    app.add_option("--format", config.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", config.seed, "seed for randomized suites")
        ->capture_default_str();

    FamilyOptions graph_opt;
    auto* cmd_graph = app.add_subcommand("graph", "construct a graph and print edge-list JSON");
    add_family_options(cmd_graph, graph_opt, false);

    FamilyOptions csf_opt;
    std::string csf_method = "colorings";
    std::string csf_basis = "m";
    auto* cmd_csf = app.add_subcommand("csf", "chromatic symmetric function");
    add_family_options(cmd_csf, csf_opt, true);
    cmd_csf->add_option("--method", csf_method, "colorings|subsets")
        ->check(CLI::IsMember({"colorings", "subsets"}));
    cmd_csf->add_option("--basis", csf_basis, "m|e|p|s")
        ->check(CLI::IsMember({"m", "e", "p", "s"}));

    std::string qcsf_m;
    std::string qcsf_method = "colorings";
    std::string qcsf_basis = "e";
    auto* cmd_qcsf = app.add_subcommand("qcsf", "t-refined chromatic function of a nuig");
    cmd_qcsf->add_option("--m", qcsf_m, "interval sequence")->required();
    cmd_qcsf->add_option("--method", qcsf_method, "colorings|tableaux")
        ->check(CLI::IsMember({"colorings", "tableaux"}));
    cmd_qcsf->add_option("--basis", qcsf_basis, "m|e|p|s")
        ->check(CLI::IsMember({"m", "e", "p", "s"}));

    std::string tab_m, tab_shape;
    bool tab_weights = false;
    auto* cmd_tab = app.add_subcommand("tableaux", "enumerate P-tableaux");
    cmd_tab->add_option("--m", tab_m, "interval sequence")->required();
    cmd_tab->add_option("--shape", tab_shape, "shape, e.g. 3,2,1^3 (omit to list shapes)");
    cmd_tab->add_flag("--weights", tab_weights, "print each tableau with its weight");

    std::string inj_m, inj_map = "eta";
    auto* cmd_inj = app.add_subcommand("injections", "verify the tableau injections");
    cmd_inj->add_option("--m", inj_m, "horseshoe crab sequence")->required();
    cmd_inj->add_option("--map", inj_map, "eta|psi|xi|counting")
        ->check(CLI::IsMember({"eta", "psi", "xi", "counting"}));

    FamilyOptions check_opt;
    auto* cmd_check = app.add_subcommand("check", "positivity checks");
    auto* cmd_epos = cmd_check->add_subcommand("e-positive", "test e-positivity of X_G");
    add_family_options(cmd_epos, check_opt, true);

    int net_n = 3;
    bool net_verify = false;
    auto* cmd_net = app.add_subcommand("net-formula", "closed form for generalized nets");
    cmd_net->add_option("--n", net_n, "body size")->required();
    cmd_net->add_flag("--verify", net_verify, "compare against the coloring engine");

    std::string uniq_family = "gspider";
    int uniq_max = 9;
    auto* cmd_uniq = app.add_subcommand("uniqueness", "pairwise-distinctness scan");
    cmd_uniq->add_option("--family", uniq_family, "gspider")
        ->check(CLI::IsMember({"gspider"}));
    cmd_uniq->add_option("--max-vertices", uniq_max, "size bound")->capture_default_str();

    int selftest_criterion = 0;
    auto* cmd_self = app.add_subcommand("selftest", "run the acceptance suite");
    cmd_self->add_option("--criterion", selftest_criterion, "run a single criterion (1..12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    if (cmd_graph->parsed()) {
        Graph g = load_graph(graph_opt);
        std::cout << to_json(g).dump(2) << "\n";
        return 0;
    }

    if (cmd_csf->parsed()) {
        Graph g = load_graph(csf_opt);
        SymFunc x = csf_method == "colorings"
                        ? csf_colorings(g, config.chromatic_caps())
                        : csf_subsets(g, config.chromatic_caps());
        SymFunc out = x.convert(basis_from_letter(csf_basis[0]));
        Json input;
        input["graph"] = to_json(g);
        input["method"] = csf_method;
        input["basis"] = csf_basis;
        emit(config, "csf", input, to_json(out), out.to_string());
        return 0;
    }

    if (cmd_qcsf->parsed()) {
        IntervalSeq seq = IntervalSeq::parse(qcsf_m);
        SymFunc x = qcsf_method == "colorings"
                        ? qcsf_colorings(nuig(seq), config.chromatic_caps())
                        : qcsf_tableaux(seq, config.tableaux_caps());
        SymFunc out = x.convert(basis_from_letter(qcsf_basis[0]));
        Json input;
        input["m"] = to_json(seq);
        input["method"] = qcsf_method;
        input["basis"] = qcsf_basis;
        emit(config, "qcsf", input, to_json(out), out.to_string());
        return 0;
    }

    if (cmd_tab->parsed()) {
        IntervalSeq seq = IntervalSeq::parse(tab_m);
        Json input;
        input["m"] = to_json(seq);
        if (tab_shape.empty()) {
            auto shapes = allowed_shapes(seq, config.tableaux_caps());
            Json result = Json::array();
            std::string text;
            for (const auto& s : shapes) {
                result.push_back(to_json(s));
                text += (text.empty() ? "(" : "  (") + s.to_compact_string() + ")";
            }
            emit(config, "tableaux", input, result, text.empty() ? "none" : text);
            return 0;
        }
        input["shape"] = tab_shape;
        auto ts = enumerate_tableaux(seq, Partition::parse(tab_shape),
                                     config.tableaux_caps());
        Json result = Json::array();
        std::string text;
        for (const auto& t : ts) {
            result.push_back(to_json(t));
            text += t.to_string();
            if (tab_weights)
                text += " weight " + std::to_string(inv_weight(t));
            text += "\n";
        }
        emit(config, "tableaux", input, result,
             ts.empty() ? "no tableaux" : text + "total " + std::to_string(ts.size()));
        return 0;
    }

    if (cmd_inj->parsed()) {
        IntervalSeq seq = IntervalSeq::parse(inj_m);
        InjectionReport report =
            inj_map == "counting" ? verify_counting_dominance(seq, config.tableaux_caps())
                                  : verify_injection(seq, inj_map, config.tableaux_caps());
        Json input;
        input["m"] = to_json(seq);
        input["map"] = inj_map;
        std::string text = inj_map + " on (" + seq.to_string() + "): " +
                           (report.all_ok() ? "all checks pass" : "FAILED");
        if (!report.all_ok()) {
            text += " [";
            if (!report.total)
                text += " total";
            if (!report.targets_valid)
                text += " target-validity";
            if (!report.injective)
                text += " injectivity";
            if (!report.branch_disjoint)
                text += " branch-disjointness";
            if (!report.weight_ok)
                text += " weight-shift";
            if (!report.counting_ok)
                text += " counting";
            text += " ]";
            for (const auto& v : report.weight_violations)
                text += "\n  weight " + std::to_string(v.source_weight) + " -> " +
                        std::to_string(v.image_weight) + ": " + v.source + " -> " + v.image;
            for (const auto& v : report.validity_violations)
                text += "\n  invalid: " + v;
        }
        emit(config, "injections", input, to_json(report), text);
        return report.all_ok() ? 0 : 1;
    }

    if (cmd_epos->parsed()) {
        Graph g = load_graph(check_opt);
        PositivityReport report = e_positivity(csf_colorings(g, config.chromatic_caps()));
        Json input;
        input["graph"] = to_json(g);
        std::string text = report.verdict();
        for (const auto& [lam, c] : report.negative_terms)
            text += "\n  witness e_{" + lam.to_string() + "} with coefficient " +
                    c.to_string();
        emit(config, "check e-positive", input, to_json(report), text);
        return report.e_positive() ? 0 : 1;
    }

    if (cmd_net->parsed()) {
        SymFunc formula = net_closed_form(net_n);
        Json input;
        input["n"] = net_n;
        bool verified = true;
        std::string text = formula.to_string();
        Json result;
        result["formula"] = to_json(formula);
        if (net_verify) {
            SymFunc computed =
                csf_colorings(generalized_net(net_n), config.chromatic_caps())
                    .convert(Basis::E);
            verified = computed == formula;
            result["verified"] = verified;
            text += verified ? "\nverified against the coloring engine"
                             : "\nMISMATCH with the coloring engine";
        }
        emit(config, "net-formula", input, result, text);
        return verified ? 0 : 1;
    }

    if (cmd_uniq->parsed()) {
        auto spiders = all_generalized_spiders(uniq_max);
        auto report = uniqueness_scan(spiders, config.chromatic_caps());
        Json input;
        input["family"] = uniq_family;
        input["max_vertices"] = uniq_max;
        std::string text = std::to_string(report.graph_count) + " graphs, " +
                           std::to_string(report.fingerprint_groups) +
                           " distinct independence polynomials: " +
                           (report.distinct() ? "all distinct" : "COLLISION FOUND");
        emit(config, "uniqueness", input, to_json(report), text);
        return report.distinct() ? 0 : 1;
    }

    if (cmd_self->parsed()) {
        SelftestConfig self;
        self.seed = config.seed;
        auto results = run_acceptance(selftest_criterion, self);
        int failures = print_acceptance_results(results);
        return failures == 0 ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const chromatica::unsupported_size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
