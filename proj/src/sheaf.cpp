#include "sheafrig/sheaf.hpp"

#include <numeric>

namespace sheafrig {

void CellularSheaf::validate() const {
    check_internal(static_cast<int>(vertex_dim.size()) == base.num_vertices(), "vertex stalk count mismatch");
    check_internal(static_cast<int>(edge_dim.size()) == base.num_edges(), "edge stalk count mismatch");
    check_internal(restriction.size() == edge_dim.size() && sign.size() == edge_dim.size(),
                   "restriction map count mismatch");
    for (int e = 0; e < base.num_edges(); ++e) {
        const MultiEdge& me = base.edge_at(e);
        check_internal(sign[e][0] + sign[e][1] == 0 && (sign[e][0] == 1 || sign[e][0] == -1),
                       "incidence signs must be opposite units");
        const int ends[2] = {me.u, me.v};
        for (int side = 0; side < 2; ++side) {
            const Mat& r = restriction[e][side];
            check_internal(r.rows() == edge_dim[e] && r.cols() == vertex_dim[ends[side]],
                           "restriction map has wrong shape");
        }
    }
    for (int d : vertex_dim) check_internal(d >= 0, "negative stalk dimension");
    for (int d : edge_dim) check_internal(d >= 0, "negative stalk dimension");
}

int CellularSheaf::total_vertex_dim() const {
    return std::accumulate(vertex_dim.begin(), vertex_dim.end(), 0);
}

int CellularSheaf::total_edge_dim() const {
    return std::accumulate(edge_dim.begin(), edge_dim.end(), 0);
}

std::vector<int> CellularSheaf::vertex_offsets() const {
    std::vector<int> off(vertex_dim.size() + 1, 0);
    for (size_t i = 0; i < vertex_dim.size(); ++i) off[i + 1] = off[i] + vertex_dim[i];
    return off;
}

std::vector<int> CellularSheaf::edge_offsets() const {
    std::vector<int> off(edge_dim.size() + 1, 0);
    for (size_t i = 0; i < edge_dim.size(); ++i) off[i + 1] = off[i] + edge_dim[i];
    return off;
}

CellularSheaf CellularSheaf::with_random_orientation(Rng& rng) const {
    CellularSheaf g = *this;
    for (auto& s : g.sign) {
        int a = rng.coin() ? 1 : -1;
        s = {a, -a};
    }
    return g;
}

Mat coboundary(const CellularSheaf& f) {
    f.validate();
    const std::vector<int> voff = f.vertex_offsets();
    const std::vector<int> eoff = f.edge_offsets();
    Mat d(f.total_edge_dim(), f.total_vertex_dim());
    for (int e = 0; e < f.base.num_edges(); ++e) {
        const MultiEdge& me = f.base.edge_at(e);
        const int ends[2] = {me.u, me.v};
        for (int side = 0; side < 2; ++side) {
            const Mat& r = f.restriction[e][side];
            const int s = f.sign[e][side];
            for (int i = 0; i < r.rows(); ++i)
                for (int j = 0; j < r.cols(); ++j) {
                    if (r.at(i, j) == 0) continue;
                    d.at(eoff[e] + i, voff[ends[side]] + j) += s * r.at(i, j);
                }
        }
    }
    return d;
}

CohomologyReport cohomology(const CellularSheaf& f, bool with_sections) {
    Mat d = coboundary(f);
    CohomologyReport rep;
    rep.coboundary_rank = rank(d);
    rep.h0 = f.total_vertex_dim() - rep.coboundary_rank;
    rep.h1 = f.total_edge_dim() - rep.coboundary_rank;
    if (with_sections) rep.sections = kernel_basis(d);
    return rep;
}

CellularSheaf constant_sheaf(const Multigraph& base, int v_dim) {
    require(v_dim >= 0, "stalk dimension must be nonnegative");
    CellularSheaf f;
    f.base = base;
    f.vertex_dim.assign(base.num_vertices(), v_dim);
    f.edge_dim.assign(base.num_edges(), v_dim);
    Mat id = Mat::identity(v_dim);
    f.restriction.assign(base.num_edges(), {id, id});
    for (int e = 0; e < base.num_edges(); ++e) {
        const MultiEdge& me = f.base.edge_at(e);
        // Lower endpoint is the source (+1).
        f.sign.push_back(me.u < me.v ? std::array<int, 2>{1, -1} : std::array<int, 2>{-1, 1});
    }
    return f;
}

SubgraphSelector SubgraphSelector::all(const Multigraph& g) {
    return {std::vector<bool>(g.num_vertices(), true), std::vector<bool>(g.num_edges(), true)};
}

SubgraphSelector SubgraphSelector::edges_only(const Multigraph& g, const std::vector<int>& edge_indices) {
    SubgraphSelector s{std::vector<bool>(g.num_vertices(), false), std::vector<bool>(g.num_edges(), false)};
    for (int e : edge_indices) {
        s.keep_edge[e] = true;
        s.keep_vertex[g.edge_at(e).u] = true;
        s.keep_vertex[g.edge_at(e).v] = true;
    }
    return s;
}

void SubgraphSelector::validate(const Multigraph& g) const {
    require(static_cast<int>(keep_vertex.size()) == g.num_vertices(), "selector vertex size mismatch");
    require(static_cast<int>(keep_edge.size()) == g.num_edges(), "selector edge size mismatch");
    for (int e = 0; e < g.num_edges(); ++e)
        if (keep_edge[e])
            require(keep_vertex[g.edge_at(e).u] && keep_vertex[g.edge_at(e).v],
                    "kept edge with a dropped endpoint is not a subgraph");
}

CellularSheaf restrict_sheaf(const CellularSheaf& f, const SubgraphSelector& sub, RestrictKind kind) {
    sub.validate(f.base);
    if (kind == RestrictKind::ZeroExtended) {
        CellularSheaf g = f;
        for (int v = 0; v < g.base.num_vertices(); ++v)
            if (!sub.keep_vertex[v]) g.vertex_dim[v] = 0;
        for (int e = 0; e < g.base.num_edges(); ++e) {
            const MultiEdge& me = g.base.edge_at(e);
            if (!sub.keep_edge[e]) g.edge_dim[e] = 0;
            g.restriction[e][0] = Mat(g.edge_dim[e], g.vertex_dim[me.u]);
            g.restriction[e][1] = Mat(g.edge_dim[e], g.vertex_dim[me.v]);
            if (sub.keep_edge[e]) g.restriction[e] = f.restriction[e];
        }
        return g;
    }
    // Kind 1: rebuild on the subgraph with compacted vertex ids.
    std::vector<int> vmap(f.base.num_vertices(), -1);
    int nv = 0;
    for (int v = 0; v < f.base.num_vertices(); ++v)
        if (sub.keep_vertex[v]) vmap[v] = nv++;
    CellularSheaf g;
    std::vector<MultiEdge> edges;
    for (int e = 0; e < f.base.num_edges(); ++e) {
        if (!sub.keep_edge[e]) continue;
        const MultiEdge& me = f.base.edge_at(e);
        edges.push_back({me.id, vmap[me.u], vmap[me.v]});
        g.edge_dim.push_back(f.edge_dim[e]);
        g.restriction.push_back(f.restriction[e]);
        g.sign.push_back(f.sign[e]);
    }
    g.base = Multigraph::assemble(nv, std::move(edges));
    g.vertex_dim.resize(nv);
    for (int v = 0; v < f.base.num_vertices(); ++v)
        if (vmap[v] >= 0) g.vertex_dim[vmap[v]] = f.vertex_dim[v];
    return g;
}

} // namespace sheafrig
