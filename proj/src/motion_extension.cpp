#include "sheafrig/motion_extension.hpp"

#include <algorithm>
#include <map>

namespace sheafrig {

namespace {

struct MoveEndpoints {
    std::vector<std::pair<int, int>> replaced;  // (u_i, u_i') per deleted edge
    std::vector<int> attach;
};

MoveEndpoints resolve_move(const Multigraph& g, const ExtensionMove& move) {
    MoveEndpoints out;
    for (int id : move.deleted_edge_ids) {
        const MultiEdge* e = g.find_edge(id);
        require(e != nullptr, "deleted edge does not exist");
        out.replaced.emplace_back(e->u, e->v);
    }
    out.attach = move.attach_vertices;
    // No parallel edges may be created: all new edges end at the new vertex,
    // so their far endpoints must be pairwise distinct.
    std::vector<int> partners;
    for (const auto& [u, uprime] : out.replaced) {
        partners.push_back(u);
        partners.push_back(uprime);
    }
    partners.insert(partners.end(), out.attach.begin(), out.attach.end());
    std::sort(partners.begin(), partners.end());
    require(std::adjacent_find(partners.begin(), partners.end()) == partners.end(),
            "move would create parallel edges");
    return out;
}

} // namespace

MotionExtensionCertificate check_motion_extension(const MotionSheafSpec& spec, const ExtensionMove& move,
                                                  const Subspace& new_subspace) {
    spec.validate();
    require(spec.base.uniform_rank() == 2, "motion extensions are defined over graph bases");
    require(new_subspace.ambient_dim() == spec.ambient_dim, "new subspace ambient mismatch");
    const int n = spec.ambient_dim;
    Multigraph g = Multigraph::from_hypergraph(spec.base);
    MoveEndpoints ends = resolve_move(g, move);
    const int k = move.order_k;
    const int d = move.dim_d;
    require(static_cast<int>(ends.replaced.size()) == k, "move order mismatch");
    require(static_cast<int>(ends.attach.size()) == d - k, "attach count mismatch");

    const auto& S = spec.vertex_subspaces;
    const Subspace& Sstar = new_subspace;

    MotionExtensionCertificate cert;
    cert.move = move;
    cert.new_subspace = new_subspace;

    // Pair sums S(u_i) + S(u_i') and attach sums S(v_j) + S*.
    std::vector<Subspace> pair_sums, attach_sums;
    for (const auto& [u, uprime] : ends.replaced) pair_sums.push_back(S[u].sum(S[uprime]));
    for (int v : ends.attach) attach_sums.push_back(S[v].sum(Sstar));

    for (int i = 0; i < k; ++i) {
        const auto& [u, uprime] = ends.replaced[i];
        bool ok = Sstar.sum(S[u]) == pair_sums[i] && Sstar.sum(S[uprime]) == pair_sums[i];
        cert.replaced_edge_conditions.push_back(ok);
    }

    auto intersect_except = [&](const std::vector<Subspace>& v, int skip) {
        std::vector<Subspace> keep;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (i != skip) keep.push_back(v[i]);
        return Subspace::intersect_all(n, keep);  // empty family gives the whole space
    };

    for (int j = 0; j < d - k; ++j) {
        Subspace t = intersect_except(attach_sums, j).intersect(intersect_except(pair_sums, -1));
        cert.attach_conditions.push_back(t.sum(S[ends.attach[j]]).dim() == n);
    }
    for (int j = 0; j < k; ++j) {
        Subspace t = intersect_except(attach_sums, -1).intersect(intersect_except(pair_sums, j));
        cert.replaced_sum_conditions.push_back(t.sum(S[ends.replaced[j].first]).dim() == n);
    }

    cert.valid = std::all_of(cert.replaced_edge_conditions.begin(), cert.replaced_edge_conditions.end(),
                             [](bool b) { return b; }) &&
                 std::all_of(cert.attach_conditions.begin(), cert.attach_conditions.end(),
                             [](bool b) { return b; }) &&
                 std::all_of(cert.replaced_sum_conditions.begin(), cert.replaced_sum_conditions.end(),
                             [](bool b) { return b; });
    return cert;
}

MotionSheafSpec extend_motion(const MotionSheafSpec& spec, const MotionExtensionCertificate& cert) {
    require(cert.valid, "certificate is not valid");
    CohomologyReport before = cohomology(build_motion_sheaf(spec));
    require(before.h1 == 0, "input motion sheaf must be independent");

    Multigraph g = Multigraph::from_hypergraph(spec.base);
    ExtensionResult res = apply_extension(g, cert.move);

    MotionSheafSpec out;
    out.base = res.graph.to_hypergraph();
    out.ambient_dim = spec.ambient_dim;
    out.vertex_subspaces = spec.vertex_subspaces;
    out.vertex_subspaces.push_back(cert.new_subspace);
    out.validate();

    CohomologyReport after = cohomology(build_motion_sheaf(out));
    check_internal(after.h1 == 0, "certified extension failed to preserve independence");
    return out;
}

} // namespace sheafrig
