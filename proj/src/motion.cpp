#include "sheafrig/motion.hpp"

#include <algorithm>

namespace sheafrig {

void MotionSheafSpec::validate() const {
    require(ambient_dim >= 0, "negative ambient dimension");
    require(static_cast<int>(vertex_subspaces.size()) == base.num_vertices(),
            "one subspace per vertex required");
    for (const auto& s : vertex_subspaces) {
        require(s.ambient_dim() == ambient_dim, "subspace ambient dimension mismatch");
        require(s.dim() == vertex_subspaces.front().dim(), "vertex subspaces must have uniform dimension");
    }
}

int MotionSheafSpec::subspace_dim() const {
    return vertex_subspaces.empty() ? 0 : vertex_subspaces.front().dim();
}

Subspace MotionSheafSpec::edge_subspace(int e) const {
    std::vector<Subspace> spaces;
    for (int v : base.edge(e)) spaces.push_back(vertex_subspaces[v]);
    return Subspace::intersect_all(ambient_dim, spaces);
}

CellularSheaf build_motion_sheaf(const MotionSheafSpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    IncidenceGraph ig = incidence_graph(spec.base);

    std::vector<Mat> q_vertex(spec.base.num_vertices());
    for (int v = 0; v < spec.base.num_vertices(); ++v)
        q_vertex[v] = spec.vertex_subspaces[v].annihilator_basis();
    std::vector<Mat> q_edge(spec.base.num_edges());
    for (int e = 0; e < spec.base.num_edges(); ++e) q_edge[e] = spec.edge_subspace(e).annihilator_basis();

    CellularSheaf f;
    f.base = ig.graph;
    f.vertex_dim.resize(ig.graph.num_vertices());
    for (int v = 0; v < ig.base_vertices; ++v) f.vertex_dim[v] = n - spec.vertex_subspaces[v].dim();
    for (int e = 0; e < ig.base_edges; ++e) f.vertex_dim[ig.edge_node(e)] = q_edge[e].rows();

    for (const auto& inc : ig.graph.edges()) {
        const int v = inc.u;
        const int e = inc.v - ig.base_vertices;
        f.edge_dim.push_back(q_vertex[v].rows());
        Mat from_edge = solve_left_factor(q_edge[e], q_vertex[v]);
        f.restriction.push_back({Mat::identity(q_vertex[v].rows()), std::move(from_edge)});
        f.sign.push_back({1, -1});
    }
    f.validate();
    return f;
}

int maxwell_defect(const MotionSheafSpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    int total = 0;
    for (const auto& s : spec.vertex_subspaces) total += n - s.dim();
    for (int e = 0; e < spec.base.num_edges(); ++e) {
        total += n - spec.edge_subspace(e).dim();
        for (int v : spec.base.edge(e)) total -= n - spec.vertex_subspaces[v].dim();
    }
    return total;
}

int projection_trick_h0(const MotionSheafSpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    IncidenceGraph ig = incidence_graph(spec.base);

    std::vector<Mat> p(spec.base.num_vertices());
    for (int v = 0; v < spec.base.num_vertices(); ++v)
        p[v] = Mat::identity(n) - projection_of(spec.vertex_subspaces[v]);

    CellularSheaf f;
    f.base = ig.graph;
    f.vertex_dim.assign(ig.graph.num_vertices(), n);
    for (const auto& inc : ig.graph.edges()) {
        const int v = inc.u;
        f.edge_dim.push_back(n);
        f.restriction.push_back({p[v], p[v]});
        f.sign.push_back({1, -1});
    }
    int h0_full = cohomology(f).h0;

    int split = 0;
    for (const auto& s : spec.vertex_subspaces) split += s.dim();
    for (int e = 0; e < spec.base.num_edges(); ++e) split += spec.edge_subspace(e).dim();
    return h0_full - split;
}

namespace {

int trivial_motion_dim(const MotionSheafSpec& spec) {
    int total = 0;
    for (const auto& comp : spec.base.components()) {
        std::vector<Subspace> spaces;
        for (int v : comp) spaces.push_back(spec.vertex_subspaces[v]);
        total += spec.ambient_dim - Subspace::intersect_all(spec.ambient_dim, spaces).dim();
    }
    return total;
}

} // namespace

RigidityVerdict analyze(const MotionSheafSpec& spec) {
    spec.validate();
    CohomologyReport rep = cohomology(build_motion_sheaf(spec));
    RigidityVerdict verdict;
    verdict.h0 = rep.h0;
    verdict.h1 = rep.h1;
    verdict.trivial_dim = trivial_motion_dim(spec);
    verdict.independent = rep.h1 == 0;
    const bool connected = spec.base.connected();
    if (!connected) {
        verdict.rigid = false;
        verdict.note = "rigidity is defined only for connected graphs";
    } else {
        verdict.rigid = verdict.h0 == verdict.trivial_dim;
    }
    verdict.minimally_rigid = verdict.independent && verdict.rigid;
    return verdict;
}

NecessaryReport necessary_condition(const MotionSheafSpec& spec, NecessaryMode mode) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int s = spec.subspace_dim();
    const int r = spec.base.uniform_rank();

    bool uniform_edges = r >= 2;
    if (uniform_edges)
        for (int e = 0; e < spec.base.num_edges(); ++e)
            if (spec.edge_subspace(e).dim() != 0) {
                uniform_edges = false;
                break;
            }

    if (mode == NecessaryMode::Auto)
        mode = uniform_edges ? NecessaryMode::Sparsity : NecessaryMode::Exact;

    NecessaryReport out;
    if (mode == NecessaryMode::Sparsity) {
        require(uniform_edges, "sparsity mode needs uniform edge stalks; use exact mode");
        const int lambda = (r - 1) * n - r * s;
        out.mode = "sparsity";
        if (lambda <= 0) {
            out.holds = true;
            return out;
        }
        if (r == 2) {
            Multigraph g = multiply_edges(Multigraph::from_hypergraph(spec.base), lambda);
            SparsityReport rep = is_sparse(g, n - s, n);
            out.holds = rep.sparse;
            out.witness = rep.violating_set;
            return out;
        }
        // Uniform rank above 2: enumerate the counting condition directly.
        const int nv = spec.base.num_vertices();
        require(nv <= 20, "subset enumeration limited to 20 vertices");
        for (std::uint64_t mask = 0; mask < (1ULL << nv); ++mask) {
            int size = __builtin_popcountll(mask);
            if (size < r) continue;
            int inside = 0;
            for (const auto& e : spec.base.edges()) {
                bool all = true;
                for (int v : e) all = all && (mask >> v & 1);
                inside += all;
            }
            if (lambda * inside > (n - s) * size - n) {
                std::vector<int> w;
                for (int v = 0; v < nv; ++v)
                    if (mask >> v & 1) w.push_back(v);
                out.holds = false;
                out.witness = std::move(w);
                return out;
            }
        }
        out.holds = true;
        return out;
    }

    // Exact mode: enumerate subgraphs whose vertex subspaces intersect
    // trivially and compare the stalk counts themselves.
    out.mode = "exact";
    const int nv = spec.base.num_vertices();
    require(nv <= 8, "exact mode limited to 8 vertices");
    std::vector<int> vdim(nv);
    for (int v = 0; v < nv; ++v) vdim[v] = n - spec.vertex_subspaces[v].dim();
    std::vector<int> edim(spec.base.num_edges());
    for (int e = 0; e < spec.base.num_edges(); ++e) edim[e] = n - spec.edge_subspace(e).dim();

    for (std::uint64_t mask = 1; mask < (1ULL << nv); ++mask) {
        std::vector<Subspace> spaces;
        int rhs = -n;
        for (int v = 0; v < nv; ++v)
            if (mask >> v & 1) {
                spaces.push_back(spec.vertex_subspaces[v]);
                rhs += vdim[v];
            }
        if (Subspace::intersect_all(n, spaces).dim() != 0) continue;
        int lhs = 0;
        for (int e = 0; e < spec.base.num_edges(); ++e) {
            bool all = true;
            for (int v : spec.base.edge(e)) all = all && (mask >> v & 1);
            if (!all) continue;
            int term = -edim[e];
            for (int v : spec.base.edge(e)) term += vdim[v];
            if (term > 0) lhs += term;  // a subgraph may omit edges, so only counting edges helps
        }
        if (lhs > rhs) {
            std::vector<int> w;
            for (int v = 0; v < nv; ++v)
                if (mask >> v & 1) w.push_back(v);
            out.holds = false;
            out.witness = std::move(w);
            return out;
        }
    }
    out.holds = true;
    return out;
}

MotionSheafSpec sample_generic_spec(const Hypergraph& g, int s, int n, Rng& rng) {
    require(s <= n, "need s <= n");
    MotionSheafSpec spec;
    spec.base = g;
    spec.ambient_dim = n;
    for (int v = 0; v < g.num_vertices(); ++v) {
        Rng sub = rng.child(static_cast<std::uint64_t>(v));
        spec.vertex_subspaces.push_back(sample_subspace(s, n, sub));
    }
    return spec;
}

MotionSheafSpec restrict_spec(const MotionSheafSpec& spec, const std::vector<bool>& keep_vertex,
                              const std::vector<bool>& keep_edge) {
    spec.validate();
    require(static_cast<int>(keep_vertex.size()) == spec.base.num_vertices(), "vertex mask size mismatch");
    require(static_cast<int>(keep_edge.size()) == spec.base.num_edges(), "edge mask size mismatch");
    std::vector<int> vmap(spec.base.num_vertices(), -1);
    MotionSheafSpec out;
    out.ambient_dim = spec.ambient_dim;
    int nv = 0;
    for (int v = 0; v < spec.base.num_vertices(); ++v)
        if (keep_vertex[v]) {
            vmap[v] = nv++;
            out.vertex_subspaces.push_back(spec.vertex_subspaces[v]);
        }
    out.base = Hypergraph(nv);
    for (int e = 0; e < spec.base.num_edges(); ++e) {
        if (!keep_edge[e]) continue;
        std::vector<int> verts;
        for (int v : spec.base.edge(e)) {
            require(vmap[v] >= 0, "kept edge with dropped vertex");
            verts.push_back(vmap[v]);
        }
        out.base.add_edge(std::move(verts));
    }
    return out;
}

MainTheoremReport check_main_theorem(const Multigraph& g, int n, int trials, Rng& rng) {
    require(n >= 3, "need n >= 3");
    MainTheoremReport out;
    out.sparse = is_sparse(multiply_edges(g, n - 2), n - 1, n).sparse;
    Hypergraph h = g.to_hypergraph();
    out.agrees = true;
    for (int t = 0; t < trials; ++t) {
        Rng sub = rng.child(static_cast<std::uint64_t>(t) + 1000003);
        MotionSheafSpec spec = sample_generic_spec(h, 1, n, sub);
        CohomologyReport rep = cohomology(build_motion_sheaf(spec));
        MainTheoremTrial trial{static_cast<std::uint64_t>(t), rep.h0, rep.h1, rep.h1 == 0};
        out.agrees = out.agrees && (trial.independent == out.sparse);
        out.trials.push_back(trial);
    }
    return out;
}

} // namespace sheafrig
