// Command-line front end: defect and distance computation, instance
// generators, certificate verification, bound tables, and extremal search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dplab/bounds.hpp"
#include "dplab/calculus.hpp"
#include "dplab/functionals.hpp"
#include "dplab/generators.hpp"
#include "dplab/instance_io.hpp"
#include "dplab/search.hpp"
#include "dplab/verify.hpp"

namespace {

using namespace dplab;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCertFailure = 1;
constexpr int kExitUsage = 2;

std::string g12(double v) { return format_g12(v); }

json witness_json(const OperatorMatrix& op, const RowPartitionWitness& witness) {
    json j;
    j["subset_a"] = json::array();
    j["subset_b"] = json::array();
    for (int i : witness.subset_a) j["subset_a"].push_back(op.space.points[i]);
    for (int i : witness.subset_b) j["subset_b"].push_back(op.space.points[i]);
    j["product"] = witness.product;
    return j;
}

std::string name_list(const OperatorMatrix& op, const std::vector<int>& points) {
    std::string out = "{";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) out += ", ";
        out += op.space.points[points[i]];
    }
    return out + "}";
}

int cmd_eps(const std::string& file, bool as_json) {
    const auto bundle = read_instance_file(file);
    const auto result = epsilon_exact(bundle.op);
    if (as_json) {
        json j;
        j["eps"] = result.eps;
        j["vertex"] = result.vertex;
        j["vertex_name"] = bundle.op.graph.vertices[result.vertex];
        j["witness"] = witness_json(bundle.op, result.witness);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "eps = " << g12(result.eps) << '\n';
        std::cout << "attained at row " << result.vertex << " ("
                  << bundle.op.graph.vertices[result.vertex] << ")\n";
        std::cout << "partition A = " << name_list(bundle.op, result.witness.subset_a)
                  << "  B = " << name_list(bundle.op, result.witness.subset_b)
                  << "  product = " << g12(result.witness.product) << '\n';
    }
    return kExitPass;
}

int cmd_dist(const std::string& file, bool as_json, bool with_witness) {
    const auto bundle = read_instance_file(file);
    const auto result = dist_to_wcm(bundle.op);
    std::optional<WCMapModel> wcm;
    if (with_witness) wcm = nearest_wcm(bundle.op);
    if (as_json) {
        json j;
        j["dist"] = result.dist;
        j["binding_vertex"] = result.witness.binding_vertex;
        j["zero_set"] = result.witness.zero_set;
        j["labels"] = json::array();
        for (int label : result.witness.labels)
            j["labels"].push_back(label == WCMapModel::kUnlabeled
                                      ? json(nullptr)
                                      : json(bundle.op.space.points[label]));
        if (wcm) {
            json w;
            w["a"] = wcm->a;
            w["h"] = json::array();
            for (int label : wcm->h)
                w["h"].push_back(label == WCMapModel::kUnlabeled
                                     ? json(nullptr)
                                     : json(bundle.op.space.points[label]));
            j["nearest_wcm"] = w;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "dist = " << g12(result.dist) << '\n';
        std::cout << "binding vertex = " << result.witness.binding_vertex << " ("
                  << bundle.op.graph.vertices[result.witness.binding_vertex] << ")\n";
        std::cout << "zeroed vertices = " << result.witness.zero_set.size() << '\n';
        if (wcm) {
            std::cout << "nearest map:\n";
            for (size_t v = 0; v < wcm->a.size(); ++v) {
                std::cout << "  " << bundle.op.graph.vertices[v] << ": ";
                if (wcm->a[v] == 0.0)
                    std::cout << "0\n";
                else
                    std::cout << g12(wcm->a[v]) << " * f("
                              << bundle.op.space.points[wcm->h[v]] << ")\n";
            }
        }
    }
    return kExitPass;
}

struct GenOptions {
    std::string family;
    std::string out;
    std::string base_file;
    int n = 0;
    int m = 0;
    int count = 1;
    int k = 0;
    double eps = -1.0;
    bool has_eps = false;
};

int cmd_gen(const GenOptions& opt) {
    InstanceBundle bundle;
    const auto need_eps = [&] {
        if (!opt.has_eps) throw ValidationError("gen " + opt.family + ": --eps is required");
        return opt.eps;
    };
    if (opt.family == "recero") {
        bundle = gen_recero(opt.n ? opt.n : 3, need_eps(), opt.m ? opt.m : 2);
    } else if (opt.family == "interval") {
        bundle = gen_interval(need_eps(), opt.m ? opt.m : 201);
    } else if (opt.family == "tripod") {
        bundle = gen_tripod(opt.n ? opt.n : 1, opt.m ? opt.m : 8);
    } else if (opt.family == "tripod-weighted") {
        bundle = gen_tripod_weighted(opt.n ? opt.n : 1, opt.m ? opt.m : 8);
    } else if (opt.family == "circles") {
        bundle = gen_circles(opt.count, opt.m ? opt.m : 16,
                             opt.has_eps ? std::optional<double>(opt.eps) : std::nullopt);
    } else if (opt.family == "extremal-functional") {
        if (opt.k < 2) throw ValidationError("gen extremal-functional: --k >= 2 is required");
        const double eps = need_eps();
        bundle = functional_instance(
            extremal_functional(opt.k, eps), o_X(eps, CardX::of(opt.k)),
            "extremal-functional(k=" + std::to_string(opt.k) + ",eps=" + g12(eps) + ")");
    } else if (opt.family == "scaled") {
        if (opt.base_file.empty())
            throw ValidationError("gen scaled: --base instance file is required");
        bundle = gen_scaled(read_instance_file(opt.base_file), need_eps());
    } else {
        throw ValidationError("unknown family: " + opt.family);
    }
    write_instance_file(bundle, opt.out);
    std::cout << "wrote " << opt.out << " (" << bundle.provenance << ")\n";
    return kExitPass;
}

json certificate_json(const Certificate& cert) {
    json j;
    j["claim_source"] = cert.claim_source;
    j["claimed_bound"] = cert.claimed_bound;
    j["achieved_value"] = cert.achieved_value;
    j["tolerance"] = cert.tolerance;
    j["status"] = to_string(cert.status);
    return j;
}

void print_report(const VerifyReport& report) {
    std::cout << report.instance_name << ":\n";
    for (const auto& cert : report.certificates) {
        std::cout << "  [" << to_string(cert.status) << "] " << cert.claim_source;
        if (cert.status != CertStatus::not_applicable)
            std::cout << "  (achieved " << g12(cert.achieved_value) << " vs "
                      << g12(cert.claimed_bound) << ")";
        std::cout << '\n';
    }
}

int cmd_verify(const std::vector<std::string>& files, bool all_generators, bool as_json) {
    std::vector<VerifyReport> reports;
    for (const auto& file : files) {
        auto report = verify_instance(read_instance_file(file));
        report.instance_name = file + " [" + report.instance_name + "]";
        reports.push_back(std::move(report));
    }
    if (all_generators) {
        auto generated = verify_all_generators();
        reports.insert(reports.end(), generated.begin(), generated.end());
    }
    if (reports.empty()) throw ValidationError("verify: no instances given");

    int failures = 0;
    for (const auto& report : reports)
        for (const auto& cert : report.certificates)
            if (cert.status == CertStatus::fail) ++failures;

    if (as_json) {
        json j = json::array();
        for (const auto& report : reports) {
            json r;
            r["instance"] = report.instance_name;
            r["all_passed"] = report.all_passed();
            r["certificates"] = json::array();
            for (const auto& cert : report.certificates)
                r["certificates"].push_back(certificate_json(cert));
            j.push_back(r);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& report : reports) print_report(report);
        std::cout << (failures == 0 ? "all certificates pass" :
                      std::to_string(failures) + " certificate(s) failed")
                  << " across " << reports.size() << " instance(s)\n";
    }
    return failures == 0 ? kExitPass : kExitCertFailure;
}

int cmd_bounds(const std::string& grid_spec, const std::string& card_spec,
               const std::string& out_file) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0)
        throw ValidationError("bounds: --eps-grid must look like a:b:step with step > 0");
    std::vector<double> grid;
    for (double eps = lo; eps <= hi + 1e-12; eps += step) grid.push_back(eps);

    CardX card = CardX::inf();
    if (card_spec != "inf" && card_spec != "infinite") {
        try {
            card = CardX::of(std::stoi(card_spec));
        } catch (const std::exception&) {
            throw ValidationError("bounds: --card must be an integer or 'inf'");
        }
    }
    const std::string csv = bound_table_csv(grid, card);
    if (out_file.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_file);
        if (!out) throw ValidationError("bounds: cannot write " + out_file);
        out << csv;
        std::cout << "wrote " << out_file << " (" << grid.size() << " rows)\n";
    }
    return kExitPass;
}

int cmd_search(int card_x, int y_vertices, const std::string& topology, double eps,
               long budget, std::uint64_t seed, const std::string& out_file,
               const std::string& trace_file) {
    SearchParams params;
    params.card_x = card_x;
    params.eps = eps;
    params.budget = budget;
    params.seed = seed;
    if (topology == "edgeless") {
        params.graph = make_discrete_y(y_vertices);
    } else if (topology == "path") {
        params.graph = make_path_y(y_vertices);
    } else if (topology == "cycle") {
        params.graph = make_path_y(y_vertices);
        if (y_vertices > 2) params.graph.edges.emplace_back(0, y_vertices - 1);
    } else {
        throw ValidationError("search: --y-topology must be edgeless, path, or cycle");
    }

    const auto result = search_extremal(params);
    InstanceBundle bundle;
    bundle.op = result.best;
    bundle.provenance = "search(card_x=" + std::to_string(card_x) +
                        ",y=" + std::to_string(y_vertices) + ":" + topology +
                        ",eps=" + g12(eps) + ",budget=" + std::to_string(budget) +
                        ",seed=" + std::to_string(seed) + ")";
    if (!out_file.empty()) write_instance_file(bundle, out_file);
    if (!trace_file.empty()) {
        std::ofstream out(trace_file);
        if (!out) throw ValidationError("search: cannot write " + trace_file);
        out << trace_csv(result);
    }
    std::cout << "best_dist = " << g12(result.best_dist) << '\n';
    std::cout << "defect = " << g12(epsilon_exact(result.best).eps) << '\n';
    if (!out_file.empty()) std::cout << "wrote " << out_file << '\n';
    if (!trace_file.empty()) std::cout << "wrote trace " << trace_file << '\n';
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model laboratory for eps-disjointness preserving operators"};
    app.require_subcommand(1);

    std::string file, out_file, trace_file;
    bool as_json = false, with_witness = false, all_generators = false;

    auto* eps_cmd = app.add_subcommand("eps", "exact disjointness defect of an instance");
    eps_cmd->add_option("file", file, "instance JSON file")->required();
    eps_cmd->add_flag("--json", as_json, "machine-readable output");

    auto* dist_cmd =
        app.add_subcommand("dist", "exact distance to the weighted composition maps");
    dist_cmd->add_option("file", file, "instance JSON file")->required();
    dist_cmd->add_flag("--json", as_json, "machine-readable output");
    dist_cmd->add_flag("--witness", with_witness, "also print the nearest map");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a named instance family");
    gen_cmd->add_option("family", gen.family,
                        "recero | interval | tripod | tripod-weighted | circles | "
                        "extremal-functional | scaled")
        ->required();
    gen_cmd->add_option("-o,--out", gen.out, "output instance file")->required();
    gen_cmd->add_option("--n", gen.n, "family size parameter");
    gen_cmd->add_option("--m", gen.m, "mesh size per segment/path");
    gen_cmd->add_option("--count", gen.count, "number of circles");
    gen_cmd->add_option("--k", gen.k, "cardinality of X (extremal-functional)");
    auto* gen_eps = gen_cmd->add_option("--eps", gen.eps, "defect parameter");
    gen_cmd->add_option("--base", gen.base_file, "base instance (scaled)");

    std::vector<std::string> verify_files;
    auto* verify_cmd = app.add_subcommand("verify", "run the certificate suite");
    verify_cmd->add_option("files", verify_files, "instance JSON files");
    verify_cmd->add_flag("--all-generators", all_generators,
                         "verify the built-in generator catalog");
    verify_cmd->add_flag("--json", as_json, "machine-readable output");

    std::string grid_spec, card_spec = "inf";
    auto* bounds_cmd = app.add_subcommand("bounds", "emit the bound table as CSV");
    bounds_cmd->add_option("--eps-grid", grid_spec, "grid a:b:step in (0, 1/4)")->required();
    bounds_cmd->add_option("--card", card_spec, "cardinality of X or 'inf'");
    bounds_cmd->add_option("-o,--out", out_file, "output CSV file (default stdout)");

    int card_x = 2, y_vertices = 1;
    std::string topology = "edgeless";
    double search_eps = 0.1;
    long budget = 0;
    std::uint64_t seed = 0;
    auto* search_cmd =
        app.add_subcommand("search", "hill-climb for extremal feasible operators");
    search_cmd->add_option("--card-x", card_x, "cardinality of X")->required();
    search_cmd->add_option("--y-vertices", y_vertices, "number of Y vertices")->required();
    search_cmd->add_option("--y-topology", topology, "edgeless | path | cycle");
    search_cmd->add_option("--eps", search_eps, "defect budget")->required();
    search_cmd->add_option("--budget", budget, "evaluation budget")->required();
    search_cmd->add_option("--seed", seed, "random seed (mandatory for reproducibility)")
        ->required();
    search_cmd->add_option("-o,--out", out_file, "write the best instance here");
    search_cmd->add_option("--trace", trace_file, "write the improvement trace CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (eps_cmd->parsed()) return cmd_eps(file, as_json);
        if (dist_cmd->parsed()) return cmd_dist(file, as_json, with_witness);
        if (gen_cmd->parsed()) {
            gen.has_eps = gen_eps->count() > 0;
            return cmd_gen(gen);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_files, all_generators, as_json);
        if (bounds_cmd->parsed()) return cmd_bounds(grid_spec, card_spec, out_file);
        if (search_cmd->parsed())
            return cmd_search(card_x, y_vertices, topology, search_eps, budget, seed,
                              out_file, trace_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
