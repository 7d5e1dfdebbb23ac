#include "sheafrig/cli.hpp"

#include <CLI11.hpp>

#include <map>

#include "sheafrig/generation.hpp"
#include "sheafrig/json_io.hpp"
#include "sheafrig/oracles.hpp"
#include "sheafrig/version.hpp"

namespace sheafrig {

namespace {

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Emitter {
    std::string out_path;  // empty = stdout
    std::ostream* console = nullptr;

    void emit(const std::string& text) const {
        if (out_path.empty())
            *console << text;
        else
            write_text_atomic(out_path, text);
    }
};

// Every report embeds the tool version, a hash of its configuration, and the
// seed of any randomized command, so identical invocations are byte-identical.
void emit_report(const Emitter& em, const std::string& command, const Json& config, const Json& result,
                 std::optional<std::uint64_t> seed) {
    Json rep;
    rep["tool"] = "sheafrig";
    rep["version"] = kVersion;
    rep["command"] = command;
    rep["config_hash"] = fnv1a_hex(command + config.dump());
    if (seed) rep["seed"] = *seed;
    rep["result"] = result;
    em.emit(rep.dump(2) + "\n");
}

MotionSheafSpec load_analysis_spec(const std::string& spec_path, const std::string& framework_path,
                                   const std::string& arrangement_path, const std::string& model, int d) {
    if (!spec_path.empty()) return motion_spec_from_json(load_json_file(spec_path));
    if (!arrangement_path.empty()) {
        Arrangement arr = arrangement_from_json(load_json_file(arrangement_path));
        return parallel_spec(ParallelModel(arr.dim), arr);
    }
    require(!framework_path.empty(), "provide --spec, --framework or --arrangement");
    Framework fw = framework_from_json(load_json_file(framework_path));
    if (d > 0) require(d == fw.dim, "--d disagrees with the framework file");
    if (model == "euclidean" || model.empty()) return bar_joint_spec(EuclideanModel(fw.dim), fw);
    if (model == "parallel") {
        Arrangement arr;
        arr.graph = fw.graph;
        arr.dim = fw.dim;
        for (const auto& p : fw.positions) arr.spaces.push_back({p, Mat(0, fw.dim)});
        return parallel_spec(ParallelModel(fw.dim), arr);
    }
    throw PreconditionError("unknown model: " + model);
}

int cmd_analyze(const std::string& spec_path, const std::string& framework_path,
                const std::string& arrangement_path, const std::string& model, int d, bool with_oracle,
                const Emitter& em) {
    MotionSheafSpec spec =
        load_analysis_spec(spec_path, framework_path, arrangement_path, model, d);
    RigidityVerdict verdict = analyze(spec);
    Json result = verdict_to_json(verdict);
    result["maxwell_defect"] = maxwell_defect(spec);
    if (with_oracle) result["oracle_h0"] = oracle::brute_h0(spec);
    Json config{{"spec", spec_path},  {"framework", framework_path}, {"arrangement", arrangement_path},
                {"model", model},     {"d", d},                      {"oracle", with_oracle}};
    emit_report(em, "analyze", config, result, std::nullopt);
    return 0;
}

int cmd_sparsity(const std::string& graph_path, int d, int l, bool oracle_mode, const Emitter& em) {
    Json j = load_json_file(graph_path);
    SparsityReport rep;
    if (j.contains("hyperedges")) {
        Hypergraph g = hypergraph_from_json(j);
        rep = oracle_mode ? oracle::brute_sparsity(g, d, l) : is_sparse(g, d, l);
    } else {
        Multigraph g = graph_from_json(j);
        rep = oracle_mode ? oracle::brute_sparsity(g, d, l) : is_sparse(g, d, l);
    }
    Json config{{"graph", graph_path}, {"d", d}, {"l", l}, {"oracle", oracle_mode}};
    emit_report(em, "sparsity", config, sparsity_to_json(rep), std::nullopt);
    return 0;
}

int cmd_generate(int n, int vertices, std::uint64_t seed, const std::string& format, const Emitter& em) {
    Rng rng(seed);
    GeneratedTight gen = generate_tight(n, vertices, rng);
    if (format == "dot") {
        em.emit(to_dot(gen.graph));
        return 0;
    }
    Json result;
    result["graph"] = graph_to_json(gen.graph);
    Json moves = Json::array();
    for (const auto& m : gen.moves) moves.push_back(move_to_json(m));
    result["moves"] = std::move(moves);
    result["tight"] = true;
    Json config{{"n", n}, {"vertices", vertices}, {"seed", seed}, {"format", format}};
    emit_report(em, "generate", config, result, seed);
    return 0;
}

int cmd_extend(const std::string& graph_path, int n, int k, std::uint64_t seed, const Emitter& em) {
    Multigraph g = graph_from_json(load_json_file(graph_path));
    Rng rng(seed);
    IndependentSheafResult built = build_independent_sheaf(g, n, rng);
    if (!built.spec) {
        Json result;
        result["error"] = "graph is not (n-1,n)-sparse";
        if (built.sparsity_witness) result["witness"] = *built.sparsity_witness;
        Json config{{"graph", graph_path}, {"n", n}, {"k", k}, {"seed", seed}};
        emit_report(em, "extend", config, result, seed);
        return 2;
    }
    const AssociatedSheafSpec& spec = *built.spec;
    require(k >= 0 && k <= std::min(n - 1, spec.base.num_edges()), "k out of range for this graph");

    // Sample a move whose new parallel classes stay within the n-2 bound;
    // beyond it the new vertex's subspace is forced into a neighbour's.
    ExtensionMove move;
    for (int attempt = 0;; ++attempt) {
        require(attempt < 500, "could not sample a valid extension move");
        move = ExtensionMove{};
        move.dim_d = n - 1;
        move.order_k = k;
        std::vector<int> ids;
        for (const auto& e : spec.base.edges()) ids.push_back(e.id);
        for (int j = 0; j < k; ++j) {
            int pick = j + static_cast<int>(rng.below(ids.size() - j));
            std::swap(ids[j], ids[pick]);
            move.deleted_edge_ids.push_back(ids[j]);
        }
        std::map<int, int> partner;
        for (int id : move.deleted_edge_ids) {
            const MultiEdge* e = spec.base.find_edge(id);
            ++partner[e->u];
            ++partner[e->v];
        }
        for (int j = 0; j < n - 1 - k; ++j) {
            int v = static_cast<int>(rng.below(spec.base.num_vertices()));
            ++partner[v];
            move.attach_vertices.push_back(v);
        }
        bool ok = true;
        for (const auto& [v, c] : partner) ok = ok && c <= n - 2;
        if (ok) break;
    }

    AssociatedSheafSpec extended = extend_associated(spec, move, rng);
    Json result;
    result["move"] = move_to_json(move);
    result["h1_before"] = cohomology_associated(spec).h1;
    result["h1_after"] = cohomology_associated(extended).h1;
    result["spec"] = associated_spec_to_json(extended);
    result["via_decomposition"] = built.via_decomposition;
    Json config{{"graph", graph_path}, {"n", n}, {"k", k}, {"seed", seed}};
    emit_report(em, "extend", config, result, seed);
    return 0;
}

int cmd_maintheorem(const std::string& graph_path, int n, int trials, std::uint64_t seed, const Emitter& em) {
    Multigraph g = graph_from_json(load_json_file(graph_path));
    Rng rng(seed);
    MainTheoremReport rep = check_main_theorem(g, n, trials, rng);
    Json result;
    result["sparse"] = rep.sparse;
    result["agrees"] = rep.agrees;
    Json trial_list = Json::array();
    for (const auto& t : rep.trials)
        trial_list.push_back(Json{{"trial", t.trial}, {"h0", t.h0}, {"h1", t.h1}, {"independent", t.independent}});
    result["trials"] = std::move(trial_list);
    Json config{{"graph", graph_path}, {"n", n}, {"trials", trials}, {"seed", seed}};
    emit_report(em, "maintheorem", config, result, seed);
    return 0;
}

int cmd_parallel(const std::string& arrangement_path, const std::string& graph_path, int n,
                 std::uint64_t seed, const Emitter& em) {
    Arrangement arr;
    std::optional<std::uint64_t> used_seed;
    if (!arrangement_path.empty()) {
        arr = arrangement_from_json(load_json_file(arrangement_path));
    } else {
        require(!graph_path.empty(), "provide --arrangement or --graph");
        require(n >= 1, "need --n for sampled arrangements");
        arr.graph = graph_from_json(load_json_file(graph_path));
        arr.dim = n;
        Rng rng(seed);
        used_seed = seed;
        for (int v = 0; v < arr.graph.num_vertices(); ++v) {
            std::vector<Rat> p;
            for (int i = 0; i < n; ++i) p.push_back(Rat(static_cast<long>(rng.int_in(-1000000, 1000000))));
            arr.spaces.push_back({std::move(p), Mat(0, n)});
        }
    }
    ParallelModel model(arr.dim);
    MotionSheafSpec spec = parallel_spec(model, arr);
    RigidityVerdict verdict = analyze(spec);

    const int group_dim = model.ambient_dim();
    SparsityReport sp =
        is_sparse(multiply_edges(arr.graph, group_dim - 2), group_dim - 1, group_dim);
    Json result = verdict_to_json(verdict);
    result["sparse"] = sp.sparse;
    result["matches"] = (verdict.h1 == 0) == sp.sparse;
    result["multiplier"] = group_dim - 2;
    result["sparsity"] = Json::array({group_dim - 1, group_dim});
    Json config{{"arrangement", arrangement_path}, {"graph", graph_path}, {"n", n}, {"seed", seed}};
    emit_report(em, "parallel", config, result, used_seed);
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sheafrig: exact sheaf-cohomology computations for graph rigidity"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Emitter em;
    em.console = &out;
    app.add_option("--out", em.out_path, "write the report to this file (atomic)");

    std::string spec_path, framework_path, arrangement_path, graph_path, model = "euclidean";
    std::string format = "json";
    int d = 0, l = 0, n = 0, k = 0, vertices = 0, trials = 10;
    std::uint64_t seed = 0;
    bool with_oracle = false;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "rigidity verdict for a motion spec or framework");
    analyze_cmd->add_option("--spec", spec_path, "motion spec JSON");
    analyze_cmd->add_option("--framework", framework_path, "bar-joint framework JSON");
    analyze_cmd->add_option("--arrangement", arrangement_path, "point/subspace arrangement JSON");
    analyze_cmd->add_option("--model", model, "euclidean|parallel (for --framework)");
    analyze_cmd->add_option("--d", d, "expected framework dimension");
    analyze_cmd->add_flag("--oracle", with_oracle, "also run the brute-force section count");

    CLI::App* sparsity_cmd = app.add_subcommand("sparsity", "(d,l)-sparsity of a (multi/hyper)graph");
    sparsity_cmd->add_option("--graph", graph_path, "graph JSON")->required();
    sparsity_cmd->add_option("--d", d, "sparsity d")->required();
    sparsity_cmd->add_option("--l", l, "sparsity l")->required();
    sparsity_cmd->add_flag("--oracle", with_oracle, "use subset enumeration instead of the pebble game");

    CLI::App* generate_cmd = app.add_subcommand("generate", "random (n-1,n)-tight multigraph with its move list");
    generate_cmd->add_option("--n", n, "count parameter n")->required();
    generate_cmd->add_option("--vertices", vertices, "target vertex count")->required();
    generate_cmd->add_option("--seed", seed, "RNG seed")->required();
    generate_cmd->add_option("--format", format, "json|dot");

    CLI::App* extend_cmd = app.add_subcommand("extend", "build an independent sheaf and apply a k-extension");
    extend_cmd->add_option("--graph", graph_path, "graph JSON")->required();
    extend_cmd->add_option("--n", n, "ambient dimension")->required();
    extend_cmd->add_option("--k", k, "extension order");
    extend_cmd->add_option("--seed", seed, "RNG seed")->required();

    CLI::App* main_cmd = app.add_subcommand("maintheorem", "independence vs sparsity over sampled specs");
    main_cmd->add_option("--graph", graph_path, "graph JSON")->required();
    main_cmd->add_option("--n", n, "ambient dimension")->required();
    main_cmd->add_option("--trials", trials, "number of sampled specs");
    main_cmd->add_option("--seed", seed, "RNG seed")->required();

    CLI::App* parallel_cmd = app.add_subcommand("parallel", "parallel-redrawing analysis of a point arrangement");
    parallel_cmd->add_option("--arrangement", arrangement_path, "arrangement JSON");
    parallel_cmd->add_option("--graph", graph_path, "graph JSON (sample random points)");
    parallel_cmd->add_option("--n", n, "spatial dimension for sampled points");
    parallel_cmd->add_option("--seed", seed, "RNG seed (required with --graph)");

    for (CLI::App* sc : {analyze_cmd, sparsity_cmd, generate_cmd, extend_cmd, main_cmd, parallel_cmd})
        sc->fallthrough();

    args.insert(args.begin(), "sheafrig");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForVersion&) {
            out << kVersion << "\n";
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
        if (analyze_cmd->parsed())
            return cmd_analyze(spec_path, framework_path, arrangement_path, model, d, with_oracle, em);
        if (sparsity_cmd->parsed()) return cmd_sparsity(graph_path, d, l, with_oracle, em);
        if (generate_cmd->parsed()) return cmd_generate(n, vertices, seed, format, em);
        if (extend_cmd->parsed()) return cmd_extend(graph_path, n, k, seed, em);
        if (main_cmd->parsed()) return cmd_maintheorem(graph_path, n, trials, seed, em);
        if (parallel_cmd->parsed()) return cmd_parallel(arrangement_path, graph_path, n, seed, em);
        err << "error: no subcommand\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace sheafrig
