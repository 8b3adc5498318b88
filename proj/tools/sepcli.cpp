// Command-line front end: gamma vectors, structural classification, the
// contraction runner, random-graph experiments and the exhaustive small-graph
// sweep. Exit codes: 0 success, 2 input error, 3 cap refusal, 4 invariant
// violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sep/complex.hpp"
#include "sep/errors.hpp"
#include "sep/gamma.hpp"
#include "sep/graph.hpp"
#include "sep/random.hpp"
#include "sep/serialize.hpp"

namespace {

struct InputFlags {
    std::string family;
    std::string graph6;
    std::string edges_path;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    auto* fam = cmd->add_option("--family", in.family, "named family: K5, K2,4, C4, P3, G5, G6,2, DC3, BC6");
    auto* g6 = cmd->add_option("--graph6", in.graph6, "graph6 string");
    auto* el = cmd->add_option("--edges", in.edges_path, "edge-list file, one 'u v' per line, 1-indexed");
    fam->excludes(g6)->excludes(el);
    g6->excludes(el);
}

sep::Graph parse_family(const std::string& spec) {
    size_t pos = 0;
    while (pos < spec.size() && !(std::isdigit(static_cast<unsigned char>(spec[pos])))) ++pos;
    std::string tag = spec.substr(0, pos);
    std::vector<int> params;
    std::stringstream ss(spec.substr(pos));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        params.push_back(std::stoi(item));
    }
    if (tag == "K" && params.size() == 1) return sep::build_named(sep::Family::complete, params);
    if (tag == "K" && params.size() == 2) return sep::build_named(sep::Family::complete_bipartite, params);
    if (tag == "C") return sep::build_named(sep::Family::cycle, params);
    if (tag == "P") return sep::build_named(sep::Family::path, params);
    if (tag == "G" && params.size() == 1) return sep::build_named(sep::Family::gn, params);
    if (tag == "G" && params.size() == 2) return sep::build_named(sep::Family::gnk, params);
    if (tag == "DC") return sep::build_named(sep::Family::double_cone_path, params);
    if (tag == "BC") return sep::build_named(sep::Family::bipartite_cone_cycle, params);
    throw std::invalid_argument("unknown family '" + spec + "'");
}

sep::Graph load_graph(const InputFlags& in) {
    if (!in.family.empty()) return parse_family(in.family);
    if (!in.graph6.empty()) return sep::parse_graph6(in.graph6);
    if (!in.edges_path.empty()) {
        std::ifstream f(in.edges_path);
        if (!f) throw std::invalid_argument("cannot open " + in.edges_path);
        return sep::parse_edge_list(f);
    }
    throw std::invalid_argument("one of --family, --graph6, --edges is required");
}

int run_gamma(const InputFlags& in, int k, const std::string& method, const std::string& format,
              std::uint64_t order_seed, bool have_order_seed, const sep::FaceLimits& limits) {
    sep::Graph g = load_graph(in);
    sep::GammaReport report;
    std::optional<std::uint64_t> seed;
    if (have_order_seed) seed = order_seed;
    if (k >= 0)
        report = sep::gamma_truncated(g, k, limits);
    else if (method == "full")
        report = sep::gamma_full(g, limits, seed);
    else if (method == "blocks")
        report = sep::gamma_via_blocks(g, -1, limits);
    else if (method == "closed")
        report = sep::gamma_closed_form(g);
    else
        report = sep::gamma_auto(g, limits);
    if (format == "text") {
        std::cout << "gamma =";
        for (const auto& x : report.gamma) std::cout << ' ' << x.str();
        std::cout << "  (dim " << report.dim << ", method " << report.method << ")\n";
    } else {
        std::cout << sep::to_json(report).dump(2) << '\n';
    }
    return 0;
}

int run_classify(const InputFlags& in, const std::string& format) {
    sep::Graph g = load_graph(in);
    sep::ClassifyReport report = sep::classify_graph(g);
    if (format == "text") {
        std::cout << "gamma2_zero: " << (report.gamma2.zero ? "true" : "false") << " (" << report.gamma2.witness
                  << ")\n"
                  << "simple: " << (report.simple ? "true" : "false") << '\n'
                  << "polytope_edges: " << report.polytope_edges << '\n';
    } else {
        std::cout << sep::to_json(report).dump(2) << '\n';
    }
    return 0;
}

int run_contract(int n, const std::string& format, const sep::FaceLimits& limits) {
    sep::LutzNevoReport report = sep::lutz_nevo_run(n, limits);
    if (format == "json") {
        std::cout << sep::to_json(report).dump(2) << '\n';
        return 0;
    }
    std::cout << "triangulation of G_" << n << ": f =";
    for (const auto& x : report.initial_f) std::cout << ' ' << x.str();
    std::cout << ", gamma =";
    for (const auto& x : report.initial_gamma) std::cout << ' ' << x.str();
    std::cout << '\n';
    for (const auto& s : report.steps) {
        std::cout << "step " << s.index << ": contract {" << s.kept << ", " << s.removed << "}"
                  << " link=" << (s.link_check ? "ok" : "FAIL") << " flag=" << (s.flag_check ? "ok" : "FAIL")
                  << " sphere=" << (s.sphere_check ? "ok" : "FAIL")
                  << " gamma-step=" << (s.gamma_step_check ? "ok" : "FAIL") << " f =";
        for (const auto& x : s.f) std::cout << ' ' << x.str();
        std::cout << '\n';
    }
    std::cout << "final complex is the boundary of the " << (n - 1) << "-dimensional cross-polytope: "
              << (report.final_crosspolytope ? "ok" : "FAIL") << '\n';
    return 0;
}

int run_experiment(const std::string& config_path, std::string beta, std::string ns, int trials, int k,
                   std::uint64_t seed, int threads, bool no_timing) {
    sep::ExperimentConfig cfg;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw std::invalid_argument("cannot open " + config_path);
        cfg = sep::parse_experiment_config(f);
    }
    if (!beta.empty()) {
        std::istringstream tmp("beta=" + beta + "\n");
        sep::ExperimentConfig b = sep::parse_experiment_config(tmp);
        cfg.beta_num = b.beta_num;
        cfg.beta_den = b.beta_den;
    }
    if (!ns.empty()) {
        std::istringstream tmp("n=" + ns + "\n");
        cfg.n_values = sep::parse_experiment_config(tmp).n_values;
    }
    if (trials > 0) cfg.trials = trials;
    if (k > 0) cfg.k = k;
    cfg.base_seed = seed;
    if (threads > 0) cfg.threads = threads;
    if (cfg.n_values.empty()) throw std::invalid_argument("experiment: no n values given");
    auto records = sep::run_experiment(cfg);
    sep::write_csv(records, cfg.k, std::cout, !no_timing);
    return 0;
}

// Exhaustive invariants over every edge subset of K_nmax: gamma_2 >= 0, the
// bad-pair formula vs enumeration, gamma_1 = 2cy, classifier agreement, and
// order invariance of the full f-vector on a deterministic subsample.
int run_sweep(int nmax, const sep::FaceLimits& limits) {
    if (nmax < 3) throw std::invalid_argument("sweep: nmax >= 3 required");
    if (nmax > 6) throw sep::CapExceeded("sweep: nmax > 6 is beyond the exhaustive budget");
    int pairs = nmax * (nmax - 1) / 2;
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < nmax; ++i)
        for (int j = i + 1; j < nmax; ++j) all_edges.push_back({i, j});
    long long total = 1ll << pairs;
    long long violations = 0;
    for (long long mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> es;
        for (int b = 0; b < pairs; ++b)
            if (mask >> b & 1) es.push_back(all_edges[static_cast<size_t>(b)]);
        sep::Graph g(nmax, es);
        sep::GammaReport full = sep::gamma_full(g, limits);
        sep::BigInt g2_enum = full.gamma.size() > 2 ? full.gamma[2] : sep::BigInt(0);
        sep::BigInt g1_enum = full.gamma.size() > 1 ? full.gamma[1] : sep::BigInt(0);
        auto complain = [&](const std::string& what) {
            ++violations;
            std::cerr << "violation on mask " << mask << ": " << what << '\n';
        };
        if (g2_enum < 0) complain("gamma_2 negative");
        if (g2_enum != sep::gamma2(g)) complain("gamma_2 formula mismatch");
        if (g1_enum != sep::gamma1(g)) complain("gamma_1 != 2 cy");
        if (sep::classify_gamma2_zero(g).zero != (g2_enum == 0)) complain("classifier mismatch");
        if (mask % 64 == 0 && g.edge_count() > 0 && sep::is_connected(g)) {
            auto base = sep::enumerate_faces(g, sep::EdgeOrder::list_order(g.edge_count()),
                                             sep::FaceMode::full, 0, limits);
            for (std::uint64_t s : {1ull, 2ull}) {
                auto alt = sep::enumerate_faces(
                    g, sep::EdgeOrder::shuffled(g.edge_count(), mask * 7 + s), sep::FaceMode::full, 0, limits);
                if (alt.f != base.f) complain("f-vector depends on the edge order");
            }
        }
        if (violations > 20) break;
    }
    std::cout << "sweep over " << total << " edge subsets of K_" << nmax << ": " << violations
              << " violations\n";
    if (violations > 0) throw sep::InvariantViolation("sweep found violations");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric edge polytope toolkit"};
    app.require_subcommand(1);

    InputFlags gamma_in, classify_in;
    int gamma_k = -1;
    std::string gamma_method = "auto";
    std::string gamma_format = "json", classify_format = "json", contract_format = "text";
    std::uint64_t order_seed = 0;
    bool have_order_seed = false;
    sep::FaceLimits limits;
    int contract_n = 5, sweep_n = 6;
    std::string exp_config, exp_beta, exp_ns;
    int exp_trials = 0, exp_k = 0, exp_threads = 0;
    std::uint64_t exp_seed = 0;
    bool exp_no_timing = false;

    auto* cmd_gamma = app.add_subcommand("gamma", "f/h/gamma vectors of the symmetric edge polytope");
    add_input_flags(cmd_gamma, gamma_in);
    cmd_gamma->add_option("--k", gamma_k, "truncate: compute gamma_0..gamma_k only");
    cmd_gamma->add_option("--method", gamma_method, "auto|full|blocks|closed")
        ->check(CLI::IsMember({"auto", "full", "blocks", "closed"}));
    cmd_gamma->add_option("--format", gamma_format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd_gamma->add_option("--order-seed", order_seed, "shuffle the edge order with this seed")
        ->each([&](const std::string&) { have_order_seed = true; });
    cmd_gamma->add_option("--cap-faces", limits.max_faces, "face enumeration cap");
    cmd_gamma->add_option("--cap-cycles", limits.max_cycles, "cycle enumeration cap");

    auto* cmd_classify = app.add_subcommand("classify", "gamma_2 classification, simplicity, polytope edges");
    add_input_flags(cmd_classify, classify_in);
    cmd_classify->add_option("--format", classify_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* cmd_contract = app.add_subcommand("contract", "run the contraction chain for G_n");
    cmd_contract->add_option("n", contract_n, "graph parameter n >= 5")->required();
    cmd_contract->add_option("--format", contract_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd_contract->add_option("--cap-faces", limits.max_faces, "face enumeration cap");

    auto* cmd_experiment = app.add_subcommand("experiment", "Erdos-Renyi sweep, CSV on stdout");
    cmd_experiment->add_option("--config", exp_config, "key=value or JSON config file");
    cmd_experiment->add_option("--beta", exp_beta, "exponent in p(n) = n^-beta (e.g. 0.5 or 3/2)");
    cmd_experiment->add_option("--n", exp_ns, "comma-separated n values");
    cmd_experiment->add_option("--trials", exp_trials, "trials per n");
    cmd_experiment->add_option("--k", exp_k, "highest gamma index");
    cmd_experiment->add_option("--seed", exp_seed, "base seed");
    cmd_experiment->add_option("--threads", exp_threads, "parallel trial workers");
    cmd_experiment->add_flag("--no-timing", exp_no_timing, "zero the millis column (byte-reproducible output)");

    auto* cmd_sweep = app.add_subcommand("sweep", "exhaustive invariant sweep over all graphs on nmax vertices");
    cmd_sweep->add_option("nmax", sweep_n, "vertex count, at most 6")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gamma->parsed())
            return run_gamma(gamma_in, gamma_k, gamma_method, gamma_format, order_seed, have_order_seed, limits);
        if (cmd_classify->parsed()) return run_classify(classify_in, classify_format);
        if (cmd_contract->parsed()) return run_contract(contract_n, contract_format, limits);
        if (cmd_experiment->parsed())
            return run_experiment(exp_config, exp_beta, exp_ns, exp_trials, exp_k, exp_seed, exp_threads,
                                  exp_no_timing);
        if (cmd_sweep->parsed()) return run_sweep(sweep_n, limits);
    } catch (const sep::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const sep::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
