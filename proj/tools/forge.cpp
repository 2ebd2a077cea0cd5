// ehrhart-forge: exact Ehrhart series, pulling triangulations and
// symmetry/unimodality certificates for doubly stochastic matrix polytopes,
// order polytopes and perfect-matching polytopes.
//
// Exit codes: 0 = pass, 1 = a mathematical verification failed, 2 = bad
// input or a budget was exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "forge/ehrhart.hpp"
#include "forge/families.hpp"
#include "forge/io.hpp"

using namespace forge;

namespace {

struct Options {
    bool machine = false;
    Budgets budgets;
};

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

int report_and_exit_code(const PipelineReport& rep, const Options& opt) {
    write_report(std::cout, rep, opt.machine);
    return rep.pass ? 0 : 1;
}

void print_series(const EhrhartSeries& s, int d) {
    std::cout << "h = " << s.numerator.coeff_string() << ", d = " << d << ", denom = (1-t)^"
              << s.denom_exponent << "\n";
}

int cmd_birkhoff(int n, const std::string& action, const Options& opt) {
    if (action == "series") {
        EhrhartSeries s = magic_square_series(n, opt.budgets);
        print_series(s, s.numerator.degree());
        return 0;
    }
    IntegerPolytope p = birkhoff(n);
    if (action == "triangulate") {
        FaceLattice lat = build_face_lattice(p, opt.budgets.max_faces);
        SimplicialComplex tri = pulling_triangulation(face_complex(lat), pipeline_order(p, {}));
        write_triangulation(std::cout, tri);
        return 0;
    }
    // verify
    std::vector<int> sigma = birkhoff_cyclic_simplex(n, p);
    PipelineReport rep = run_pipeline(p, sigma, pipeline_order(p, sigma), opt.budgets);
    return report_and_exit_code(rep, opt);
}

int cmd_poset(const std::string& path, const std::string& action, const Options& opt) {
    Poset omega = read_poset_file(path);
    if (action == "eulerian") {
        if (!omega.naturally_labeled()) throw input_error("poset is not naturally labeled");
        std::cout << eulerian_polynomial(omega).coeff_string() << "\n";
        return 0;
    }
    OrderPolytope op = order_polytope(omega);
    if (action == "series") {
        CountingSeries s = series_by_counting(op.polytope, opt.budgets);
        print_series(s.series, s.series.numerator.degree());
        return 0;
    }
    if (!omega.graded()) throw input_error("poset is not graded");
    if (!omega.naturally_labeled()) throw input_error("poset is not naturally labeled");
    if (action == "equatorial") {
        SimplicialComplex eq = equatorial_complex(omega, op);
        write_triangulation(std::cout, eq);
        std::cout << "h = " << h_polynomial(eq).coeff_string() << "\n";
        return 0;
    }
    // verify: the rank-ideal pipeline plus the descent-polynomial identity
    std::vector<int> sigma = rank_ideal_simplex(omega, op);
    PipelineReport rep = run_pipeline(op.polytope, sigma, pipeline_order(op.polytope, sigma),
                                      opt.budgets);
    IntPolynomial w = eulerian_polynomial(omega);
    bool w_match = rep.h_triangulation == w;
    rep.stages.push_back({"descent-polynomial", w_match,
                          w_match ? "numerator equals the descent polynomial"
                                  : "numerator differs from the descent polynomial " +
                                        w.coeff_string()});
    rep.pass = rep.pass && w_match;
    return report_and_exit_code(rep, opt);
}

int cmd_graph(const std::string& path, const std::string& action, const Options& opt) {
    MultiGraph g = read_graph_file(path);
    if (action == "series") {
        GraphSeries s = magic_labeling_series(g, opt.budgets);
        std::cout << "h = " << s.series.numerator.coeff_string() << ", m = " << s.m
                  << ", d = " << s.d << "\n";
        return 0;
    }
    // verify
    IntegerPolytope p = matching_polytope(g);
    auto ones = ones_minimal_element(p);
    if (!ones) throw input_error("graph is not regular: no all-ones minimal labeling");
    SpecialSimplexSearch found = find_special_simplex(p, &ones->first);
    if (found.outcome != SearchOutcome::found)
        throw verification_error("no disjoint perfect-matching decomposition of the all-ones labeling");
    PipelineReport rep = run_pipeline(p, found.cert.vertex_indices,
                                      pipeline_order(p, found.cert.vertex_indices), opt.budgets);
    return report_and_exit_code(rep, opt);
}

int cmd_polytope(const std::string& path, const std::string& action, const std::string& order_arg,
                 const std::string& sigma_arg, const Options& opt) {
    IntegerPolytope p = read_polytope_file(path);
    ValidationReport vrep = validate_polytope(p);
    if (!vrep.ok) throw input_error("invalid polytope: " + vrep.message);
    if (action == "validate") {
        std::cout << "dim " << p.dim << ", " << p.vertices.size() << " vertices, "
                  << p.facets.size() << " facets\n";
        return 0;
    }
    if (action == "series") {
        CountingSeries s = series_by_counting(p, opt.budgets);
        print_series(s.series, s.series.numerator.degree());
        return 0;
    }
    if (action == "triangulate") {
        VertexOrder order = order_arg.empty() ? pipeline_order(p, {})
                                              : VertexOrder{parse_index_list(order_arg)};
        FaceLattice lat = build_face_lattice(p, opt.budgets.max_faces);
        SimplicialComplex tri = pulling_triangulation(face_complex(lat), order);
        write_triangulation(std::cout, tri);
        return 0;
    }
    if (action == "find-special") {
        SpecialSimplexSearch res = find_special_simplex(p);
        if (res.outcome == SearchOutcome::inconclusive) throw budget_error(res.note);
        if (res.outcome == SearchOutcome::none) {
            std::cout << "no special simplex found (exhaustive)\n";
            return 1;
        }
        std::cout << "special simplex: n = " << res.cert.n << ", vertices =";
        for (int v : res.cert.vertex_indices) std::cout << " " << v;
        std::cout << "\n";
        return 0;
    }
    // verify
    std::vector<int> sigma;
    if (!sigma_arg.empty()) {
        sigma = parse_index_list(sigma_arg);
    } else {
        SpecialSimplexSearch res = find_special_simplex(p);
        if (res.outcome == SearchOutcome::inconclusive) throw budget_error(res.note);
        if (res.outcome == SearchOutcome::none) {
            std::cout << "no special simplex found (exhaustive)\n";
            return 1;
        }
        sigma = res.cert.vertex_indices;
    }
    VertexOrder order = order_arg.empty() ? pipeline_order(p, sigma)
                                          : VertexOrder{parse_index_list(order_arg)};
    PipelineReport rep = run_pipeline(p, sigma, order, opt.budgets);
    return report_and_exit_code(rep, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ehrhart series and unimodality certificates"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--machine", opt.machine, "machine-readable report output");
    app.add_option("--max-dilate", opt.budgets.max_dilate, "largest dilate to enumerate");
    unsigned long long max_nodes = opt.budgets.max_nodes;
    app.add_option("--max-nodes", max_nodes, "enumeration node budget");
    app.add_option("--max-faces", opt.budgets.max_faces, "face lattice budget");

    int n = 0;
    std::string action, path, order_arg, sigma_arg;

    CLI::App* birkhoff_cmd = app.add_subcommand("birkhoff", "doubly stochastic matrix polytopes");
    birkhoff_cmd->fallthrough();
    birkhoff_cmd->add_option("--n", n, "matrix size")->required();
    birkhoff_cmd->add_option("action", action, "series|triangulate|verify")
        ->required()
        ->check(CLI::IsMember({"series", "triangulate", "verify"}));

    CLI::App* poset_cmd = app.add_subcommand("poset", "order polytopes of posets");
    poset_cmd->fallthrough();
    poset_cmd->add_option("path", path, "poset file")->required();
    poset_cmd->add_option("action", action, "eulerian|series|equatorial|verify")
        ->required()
        ->check(CLI::IsMember({"eulerian", "series", "equatorial", "verify"}));

    CLI::App* graph_cmd = app.add_subcommand("graph", "perfect-matching polytopes");
    graph_cmd->fallthrough();
    graph_cmd->add_option("path", path, "graph file")->required();
    graph_cmd->add_option("action", action, "series|verify")
        ->required()
        ->check(CLI::IsMember({"series", "verify"}));

    CLI::App* poly_cmd = app.add_subcommand("polytope", "polytopes from files");
    poly_cmd->fallthrough();
    poly_cmd->add_option("path", path, "polytope file")->required();
    poly_cmd->add_option("action", action, "validate|series|triangulate|find-special|verify")
        ->required()
        ->check(CLI::IsMember({"validate", "series", "triangulate", "find-special", "verify"}));
    poly_cmd->add_option("--order", order_arg, "comma-separated vertex order (coned front first)");
    poly_cmd->add_option("--sigma", sigma_arg, "comma-separated special simplex vertex indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.budgets.max_nodes = max_nodes;

    try {
        if (birkhoff_cmd->parsed()) return cmd_birkhoff(n, action, opt);
        if (poset_cmd->parsed()) return cmd_poset(path, action, opt);
        if (graph_cmd->parsed()) return cmd_graph(path, action, opt);
        if (poly_cmd->parsed()) return cmd_polytope(path, action, order_arg, sigma_arg, opt);
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
