#include "sheafrig/associated.hpp"

#include <algorithm>
#include <map>

#include "sheafrig/generation.hpp"

namespace sheafrig {

void AssociatedSheafSpec::validate() const {
    require(static_cast<int>(vertex_subspaces.size()) == base.num_vertices(), "one subspace per vertex required");
    require(static_cast<int>(edge_forms.size()) == base.num_edges(), "one form per edge required");
    for (const auto& s : vertex_subspaces) {
        require(s.ambient_dim() == ambient_dim, "subspace ambient dimension mismatch");
        require(s.dim() == vertex_subspaces.front().dim(), "vertex subspaces must have uniform dimension");
    }
    for (int e = 0; e < base.num_edges(); ++e) {
        const MultiEdge& me = base.edge_at(e);
        require(edge_forms[e].ambient_dim() == ambient_dim, "form ambient dimension mismatch");
        require(edge_forms[e].annihilates(vertex_subspaces[me.u]) &&
                    edge_forms[e].annihilates(vertex_subspaces[me.v]),
                "edge form must annihilate both endpoint subspaces");
        require(vertex_subspaces[me.u].intersect(vertex_subspaces[me.v]).dim() == 0,
                "endpoint subspaces must meet trivially");
    }
}

int AssociatedSheafSpec::subspace_dim() const {
    return vertex_subspaces.empty() ? 0 : vertex_subspaces.front().dim();
}

const LinearForm& AssociatedSheafSpec::form_for_edge_id(int id) const {
    int idx = base.index_of_edge(id);
    require(idx >= 0, "no edge with the given id");
    return edge_forms[idx];
}

CellularSheaf to_sheaf(const AssociatedSheafSpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    std::vector<Mat> q(spec.base.num_vertices());
    for (int v = 0; v < spec.base.num_vertices(); ++v) q[v] = spec.vertex_subspaces[v].annihilator_basis();

    CellularSheaf f;
    f.base = spec.base;
    for (int v = 0; v < spec.base.num_vertices(); ++v) f.vertex_dim.push_back(n - spec.vertex_subspaces[v].dim());
    for (int e = 0; e < spec.base.num_edges(); ++e) {
        const MultiEdge& me = spec.base.edge_at(e);
        f.edge_dim.push_back(1);
        Mat alpha = Mat::row_vector(spec.edge_forms[e].coefficients());
        f.restriction.push_back({solve_left_factor(q[me.u], alpha), solve_left_factor(q[me.v], alpha)});
        f.sign.push_back(me.u < me.v ? std::array<int, 2>{1, -1} : std::array<int, 2>{-1, 1});
    }
    f.validate();
    return f;
}

CellularSheaf collapse_to_graph_sheaf(const MotionSheafSpec& spec) {
    spec.validate();
    require(spec.base.uniform_rank() == 2, "collapse needs a graph base");
    const int n = spec.ambient_dim;
    Multigraph g = Multigraph::from_hypergraph(spec.base);
    std::vector<Mat> q(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) q[v] = spec.vertex_subspaces[v].annihilator_basis();

    CellularSheaf f;
    f.base = g;
    for (int v = 0; v < g.num_vertices(); ++v) f.vertex_dim.push_back(n - spec.vertex_subspaces[v].dim());
    for (int e = 0; e < g.num_edges(); ++e) {
        const MultiEdge& me = g.edge_at(e);
        Mat qsum = spec.vertex_subspaces[me.u].sum(spec.vertex_subspaces[me.v]).annihilator_basis();
        f.edge_dim.push_back(qsum.rows());
        f.restriction.push_back({solve_left_factor(q[me.u], qsum), solve_left_factor(q[me.v], qsum)});
        f.sign.push_back(me.u < me.v ? std::array<int, 2>{1, -1} : std::array<int, 2>{-1, 1});
    }
    f.validate();
    return f;
}

AssociatedSheafSpec expand_to_multigraph(const MotionSheafSpec& spec) {
    spec.validate();
    require(spec.base.uniform_rank() == 2, "expansion needs a graph base");
    const int n = spec.ambient_dim;
    const int s = spec.subspace_dim();
    require(2 * s <= n, "need s <= n/2");
    const int copies = n - 2 * s;
    Multigraph g = Multigraph::from_hypergraph(spec.base);

    AssociatedSheafSpec out;
    out.ambient_dim = n;
    out.vertex_subspaces = spec.vertex_subspaces;
    out.base = Multigraph(g.num_vertices());
    for (const auto& me : g.edges()) {
        Subspace sum = spec.vertex_subspaces[me.u].sum(spec.vertex_subspaces[me.v]);
        require(sum.dim() == 2 * s, "endpoint subspaces must meet trivially");
        Mat ann = sum.annihilator_basis();
        check_internal(ann.rows() == copies, "annihilator dimension mismatch");
        for (int c = 0; c < copies; ++c) {
            out.base.add_edge(me.u, me.v);
            out.edge_forms.emplace_back(n, ann.row(c));
        }
    }
    out.validate();
    return out;
}

CohomologyReport cohomology_associated(const AssociatedSheafSpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    CohomologyReport direct = cohomology(to_sheaf(spec));

    // Row matrix route: one row per edge, blocks alpha_e o (Id - P_v) at the
    // endpoints with opposite signs; the kernel is H^0 plus the vertex
    // subspaces.
    std::vector<Mat> ip(spec.base.num_vertices());
    for (int v = 0; v < spec.base.num_vertices(); ++v)
        ip[v] = Mat::identity(n) - projection_of(spec.vertex_subspaces[v]);
    Mat r(spec.base.num_edges(), n * spec.base.num_vertices());
    for (int e = 0; e < spec.base.num_edges(); ++e) {
        const MultiEdge& me = spec.base.edge_at(e);
        Mat row_u = Mat::row_vector(spec.edge_forms[e].coefficients()) * ip[me.u];
        Mat row_v = Mat::row_vector(spec.edge_forms[e].coefficients()) * ip[me.v];
        for (int j = 0; j < n; ++j) {
            r.at(e, n * me.u + j) += row_u.at(0, j);
            r.at(e, n * me.v + j) -= row_v.at(0, j);
        }
    }
    int s_total = 0;
    for (const auto& s : spec.vertex_subspaces) s_total += s.dim();
    int nullity = n * spec.base.num_vertices() - rank(r);
    int h0_rows = nullity - s_total;
    int euler = n * spec.base.num_vertices() - s_total - spec.base.num_edges();
    int h1_rows = h0_rows - euler;

    check_internal(h0_rows == direct.h0 && h1_rows == direct.h1,
                   "associated-sheaf cohomology routes disagree");
    return direct;
}

namespace {

bool forms_independent(const std::vector<LinearForm>& forms, int n) {
    Mat m(static_cast<int>(forms.size()), n);
    for (size_t i = 0; i < forms.size(); ++i) m.set_row(static_cast<int>(i), forms[i].coefficients());
    return rank(m) == static_cast<int>(forms.size());
}

} // namespace

AssociatedSheafSpec extend_associated(const AssociatedSheafSpec& spec, const ExtensionMove& move,
                                      const std::vector<LinearForm>& fresh_forms) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int s = spec.subspace_dim();
    require(move.dim_d == n - s, "extension dimension must be n - s");
    const int d = move.dim_d, k = move.order_k;
    require(static_cast<int>(fresh_forms.size()) == d - k, "need one fresh form per attach edge");

    std::vector<LinearForm> all_forms;
    for (int id : move.deleted_edge_ids) all_forms.push_back(spec.form_for_edge_id(id));
    for (int j = 0; j < d - k; ++j) {
        const LinearForm& a = fresh_forms[j];
        require(a.ambient_dim() == n, "fresh form ambient mismatch");
        require(a.annihilates(spec.vertex_subspaces[move.attach_vertices[j]]),
                "fresh form must annihilate its attach vertex's subspace");
        all_forms.push_back(a);
    }
    require(forms_independent(all_forms, n), "extension forms must be linearly independent");

    std::vector<Subspace> kernels;
    for (const auto& a : all_forms) kernels.push_back(a.kernel());
    Subspace new_space = Subspace::intersect_all(n, kernels);
    check_internal(new_space.dim() == s, "new vertex subspace is not s-dimensional");

    ExtensionResult res = apply_extension(spec.base, move);
    AssociatedSheafSpec out;
    out.base = res.graph;
    out.ambient_dim = n;
    out.vertex_subspaces = spec.vertex_subspaces;
    out.vertex_subspaces.push_back(new_space);
    // Surviving edges keep their forms; the 2k replacement edges inherit the
    // deleted forms pairwise, the attach edges take the fresh forms.
    for (int e = 0; e < out.base.num_edges(); ++e) {
        int id = out.base.edge_at(e).id;
        auto pos = std::find(res.new_edge_ids.begin(), res.new_edge_ids.end(), id);
        if (pos == res.new_edge_ids.end()) {
            out.edge_forms.push_back(spec.form_for_edge_id(id));
        } else {
            int j = static_cast<int>(pos - res.new_edge_ids.begin());
            out.edge_forms.push_back(j < 2 * k ? all_forms[j / 2] : all_forms[k + (j - 2 * k)]);
        }
    }
    out.validate();

    // The move preserves independence; trust nothing and re-verify.
    if (cohomology_associated(spec).h1 == 0)
        check_internal(cohomology_associated(out).h1 == 0, "extension failed to preserve independence");
    return out;
}

AssociatedSheafSpec extend_associated(const AssociatedSheafSpec& spec, const ExtensionMove& move, Rng& rng) {
    const int d = move.dim_d, k = move.order_k;
    require(d == spec.ambient_dim - spec.subspace_dim(), "extension dimension must be n - s");
    require(static_cast<int>(move.attach_vertices.size()) == d - k, "move must attach exactly d-k edges");
    for (int id : move.deleted_edge_ids)
        require(spec.base.find_edge(id) != nullptr, "deleted edge does not exist");
    for (int v : move.attach_vertices)
        require(v >= 0 && v < spec.base.num_vertices(), "attach vertex does not exist");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<LinearForm> fresh;
        Rng sub = rng.child(static_cast<std::uint64_t>(attempt));
        for (int j = 0; j < d - k; ++j)
            fresh.push_back(sample_form_annihilating(spec.vertex_subspaces[move.attach_vertices[j]], sub));
        std::vector<LinearForm> all = fresh;
        for (int id : move.deleted_edge_ids) all.push_back(spec.form_for_edge_id(id));
        if (!forms_independent(all, spec.ambient_dim)) continue;
        try {
            return extend_associated(spec, move, fresh);
        } catch (const InternalError&) {
            continue;  // degenerate sample; retry
        } catch (const PreconditionError&) {
            continue;  // sampled point left the family; retry
        }
    }
    throw PreconditionError("could not sample admissible fresh forms for the extension");
}

std::optional<AssociatedSheafSpec> find_independent_forms(const AssociatedSheafSpec& spec,
                                                          const std::vector<int>& edge_indices, Rng& rng) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int s = spec.subspace_dim();
    require(static_cast<int>(edge_indices.size()) <= n - s, "selection larger than n - s");
    std::vector<int> per_vertex(spec.base.num_vertices(), 0);
    for (int e : edge_indices) {
        require(e >= 0 && e < spec.base.num_edges(), "edge index out of range");
        ++per_vertex[spec.base.edge_at(e).u];
        ++per_vertex[spec.base.edge_at(e).v];
    }
    for (int c : per_vertex) require(c <= n - 2 * s, "too many selected edges at one vertex");

    int generic_h1 = cohomology_associated(spec).h1;
    for (int probe = 0; probe < 3; ++probe) {
        Rng sub = rng.child(50000 + static_cast<std::uint64_t>(probe));
        try {
            AssociatedSheafSpec fresh = sample_associated_spec(spec.base, s, n, sub);
            generic_h1 = std::min(generic_h1, cohomology_associated(fresh).h1);
        } catch (const InternalError&) {
        }
    }
    auto selected_independent = [&](const AssociatedSheafSpec& cand) {
        std::vector<LinearForm> sel;
        for (int e : edge_indices) sel.push_back(cand.edge_forms[e]);
        return forms_independent(sel, n);
    };

    // Resampling the selected forms inside their annihilators usually
    // suffices.
    for (int attempt = 0; attempt < 16; ++attempt) {
        AssociatedSheafSpec cand = spec;
        Rng sub = rng.child(static_cast<std::uint64_t>(attempt));
        for (int e : edge_indices) {
            const MultiEdge& me = spec.base.edge_at(e);
            Subspace sum = spec.vertex_subspaces[me.u].sum(spec.vertex_subspaces[me.v]);
            cand.edge_forms[e] = sample_form_annihilating(sum, sub);
        }
        if (!selected_independent(cand)) continue;
        if (cohomology_associated(cand).h1 == generic_h1) return cand;
    }

    // Full rebuild: free forms on the selection, then vertex subspaces inside
    // the intersected kernels, then fresh forms elsewhere.
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng sub = rng.child(1000 + static_cast<std::uint64_t>(attempt));
        AssociatedSheafSpec cand = spec;
        std::vector<LinearForm> sel;
        for (size_t i = 0; i < edge_indices.size(); ++i) sel.push_back(sample_form(n, sub));
        if (!forms_independent(sel, n)) continue;
        for (size_t i = 0; i < edge_indices.size(); ++i) cand.edge_forms[edge_indices[i]] = sel[i];

        bool ok = true;
        for (int v = 0; v < spec.base.num_vertices() && ok; ++v) {
            std::vector<Subspace> kernels;
            for (size_t i = 0; i < edge_indices.size(); ++i) {
                const MultiEdge& me = spec.base.edge_at(edge_indices[i]);
                if (me.u == v || me.v == v) kernels.push_back(sel[i].kernel());
            }
            Subspace allowed = Subspace::intersect_all(n, kernels);
            if (allowed.dim() < s) {
                ok = false;
                break;
            }
            // Random s-dimensional subspace of `allowed`.
            bool assigned = false;
            for (int tries = 0; tries < 16 && !assigned; ++tries) {
                Mat combo(s, allowed.dim());
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < allowed.dim(); ++j)
                        combo.at(i, j) = Rat(static_cast<long>(sub.int_in(-1000000, 1000000)));
                Subspace candidate(n, combo * allowed.basis());
                if (candidate.dim() != s) continue;
                bool disjoint = true;
                for (int w = 0; w < v; ++w)
                    if (cand.vertex_subspaces[w].intersect(candidate).dim() != 0) disjoint = false;
                if (!disjoint) continue;
                cand.vertex_subspaces[v] = candidate;
                assigned = true;
            }
            ok = assigned;
        }
        if (!ok) continue;
        bool valid = true;
        for (int e = 0; e < spec.base.num_edges() && valid; ++e) {
            if (std::find(edge_indices.begin(), edge_indices.end(), e) != edge_indices.end()) {
                const MultiEdge& me = spec.base.edge_at(e);
                valid = cand.edge_forms[e].annihilates(cand.vertex_subspaces[me.u]) &&
                        cand.edge_forms[e].annihilates(cand.vertex_subspaces[me.v]);
                continue;
            }
            const MultiEdge& me = spec.base.edge_at(e);
            Subspace sum = cand.vertex_subspaces[me.u].sum(cand.vertex_subspaces[me.v]);
            if (sum.dim() != 2 * s) {
                valid = false;
                break;
            }
            cand.edge_forms[e] = sample_form_annihilating(sum, sub);
        }
        if (!valid) continue;
        if (!selected_independent(cand)) continue;
        try {
            cand.validate();
        } catch (const PreconditionError&) {
            continue;
        }
        if (cohomology_associated(cand).h1 == generic_h1) return cand;
    }
    return std::nullopt;
}

AssociatedSheafSpec sample_banana_spec(int n, Rng& rng) {
    require(n >= 3, "need n >= 3");
    Multigraph base = Multigraph::banana(n - 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng sub = rng.child(static_cast<std::uint64_t>(attempt));
        Subspace su = sample_subspace(1, n, sub);
        Subspace sv = sample_subspace(1, n, sub);
        if (su.intersect(sv).dim() != 0) continue;
        Subspace sum = su.sum(sv);
        AssociatedSheafSpec spec;
        spec.base = base;
        spec.ambient_dim = n;
        spec.vertex_subspaces = {su, sv};
        std::vector<LinearForm> forms;
        for (int e = 0; e < n - 2; ++e) forms.push_back(sample_form_annihilating(sum, sub));
        if (!forms_independent(forms, n)) continue;
        spec.edge_forms = std::move(forms);
        spec.validate();
        if (cohomology_associated(spec).h1 != 0) continue;
        return spec;
    }
    throw InternalError("failed to sample an independent base spec");
}

AssociatedSheafSpec sample_associated_spec(const Multigraph& g, int s, int n, Rng& rng) {
    require(2 * s <= n, "need s <= n/2");
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng sub = rng.child(static_cast<std::uint64_t>(attempt));
        AssociatedSheafSpec spec;
        spec.base = g;
        spec.ambient_dim = n;
        bool ok = true;
        for (int v = 0; v < g.num_vertices() && ok; ++v) {
            Subspace cand = sample_subspace(s, n, sub);
            for (int w = 0; w < v; ++w)
                if (spec.vertex_subspaces[w].intersect(cand).dim() != 0) ok = false;
            spec.vertex_subspaces.push_back(cand);
        }
        if (!ok) continue;
        for (int e = 0; e < g.num_edges() && ok; ++e) {
            const MultiEdge& me = g.edge_at(e);
            Subspace sum = spec.vertex_subspaces[me.u].sum(spec.vertex_subspaces[me.v]);
            if (sum.dim() != 2 * s) {
                ok = false;
                break;
            }
            spec.edge_forms.push_back(sample_form_annihilating(sum, sub));
        }
        if (!ok) continue;
        spec.validate();
        return spec;
    }
    throw InternalError("failed to sample an associated spec");
}

IndependentSheafResult build_independent_sheaf(const Multigraph& g, int n, Rng& rng) {
    require(n >= 3, "need n >= 3");
    IndependentSheafResult result;
    SparsityReport rep = is_sparse(g, n - 1, n);
    if (!rep.sparse) {
        result.sparsity_witness = rep.violating_set;
        return result;
    }

    // Augment to a tight graph with random admissible edges.
    Multigraph tight = g;
    const int target = (n - 1) * tight.num_vertices() - n;
    require(tight.num_vertices() >= 2, "need at least two vertices");
    int guard = 0;
    while (tight.num_edges() < target) {
        check_internal(++guard < 100000, "failed to augment to a tight graph");
        int u = static_cast<int>(rng.below(tight.num_vertices()));
        int v = static_cast<int>(rng.below(tight.num_vertices()));
        if (u == v) continue;
        if (tight.parallel_count(u, v) >= n - 2) continue;
        Multigraph cand = tight;
        cand.add_edge(u, v);
        if (!is_sparse(cand, n - 1, n).sparse) continue;
        tight = std::move(cand);
    }

    auto decomposition = decompose_tight_full(tight, n);
    if (decomposition) {
        result.via_decomposition = true;
        AssociatedSheafSpec replay = sample_banana_spec(n, rng);
        for (const auto& mv : decomposition->moves) replay = extend_associated(replay, mv, rng);
        // Transport along the recorded isomorphism back to `tight`'s labels.
        AssociatedSheafSpec on_tight;
        on_tight.base = tight;
        on_tight.ambient_dim = n;
        on_tight.vertex_subspaces.resize(tight.num_vertices());
        for (int v = 0; v < tight.num_vertices(); ++v)
            on_tight.vertex_subspaces[v] = replay.vertex_subspaces[decomposition->vertex_map[v]];
        std::map<int, int> edge_map;
        for (size_t i = 0; i < decomposition->edge_map_input.size(); ++i)
            edge_map[decomposition->edge_map_input[i]] = decomposition->edge_map_replay[i];
        for (int e = 0; e < tight.num_edges(); ++e)
            on_tight.edge_forms.push_back(replay.form_for_edge_id(edge_map.at(tight.edge_at(e).id)));
        on_tight.validate();

        // Keep only the edges of the input graph.
        AssociatedSheafSpec out;
        out.base = g;
        out.ambient_dim = n;
        out.vertex_subspaces = on_tight.vertex_subspaces;
        for (int e = 0; e < g.num_edges(); ++e) out.edge_forms.push_back(on_tight.edge_forms[e]);
        out.validate();
        check_internal(cohomology_associated(out).h1 == 0, "restriction of an independent sheaf gained h1");
        result.spec = std::move(out);
        return result;
    }

    // Search budget ran out: sample directly and verify.
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng sub = rng.child(777 + static_cast<std::uint64_t>(attempt));
        AssociatedSheafSpec cand = sample_associated_spec(g, 1, n, sub);
        if (cohomology_associated(cand).h1 == 0) {
            result.spec = std::move(cand);
            return result;
        }
    }
    throw InternalError("failed to construct an independent sheaf on a sparse graph");
}

} // namespace sheafrig
