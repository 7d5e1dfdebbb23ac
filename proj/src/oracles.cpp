#include "sheafrig/oracles.hpp"

#include <cstdlib>

namespace sheafrig {
namespace oracle {

int budget() {
    if (const char* env = std::getenv("SHEAFRIG_BUDGET")) {
        int b = std::atoi(env);
        if (b > 0) return b;
    }
    return 200;
}

namespace {

// Plain rational Gaussian elimination, kept deliberately separate from the
// main fraction-free routine.
int gauss_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const int nr = static_cast<int>(m.size());
    const int nc = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = nr - 1; i >= r; --i)  // bottom-most pivot, unlike the main path
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        for (int i = r + 1; i < nr; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Rows spanning { a : a * basis_row = 0 for each row }, by solving the
// homogeneous system from scratch.
std::vector<std::vector<Rat>> null_space(const std::vector<std::vector<Rat>>& rows, int n) {
    std::vector<std::vector<Rat>> m = rows;
    const int nr = static_cast<int>(m.size());
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < n && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        Rat lead = m[r][c];
        for (int j = 0; j < n; ++j) m[r][j] /= lead;
        for (int i = 0; i < nr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> out;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[c] = 1;
        for (size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = -m[p][c];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

RigidityMatrixReport rigidity_matrix(const Framework& fw) {
    fw.validate();
    const int d = fw.dim;
    const int nv = fw.graph.num_vertices();
    RigidityMatrixReport rep;
    rep.matrix = Mat(fw.graph.num_edges(), d * nv);
    std::vector<std::vector<Rat>> rows;
    for (int e = 0; e < fw.graph.num_edges(); ++e) {
        const MultiEdge& me = fw.graph.edge_at(e);
        require(fw.positions[me.u] != fw.positions[me.v], "coincident adjacent points");
        std::vector<Rat> row(d * nv, Rat(0));
        for (int i = 0; i < d; ++i) {
            Rat diff = fw.positions[me.u][i] - fw.positions[me.v][i];
            row[d * me.u + i] = diff;
            row[d * me.v + i] = -diff;
            rep.matrix.at(e, d * me.u + i) = diff;
            rep.matrix.at(e, d * me.v + i) = -diff;
        }
        rows.push_back(std::move(row));
    }
    rep.rank = gauss_rank(rows);
    rep.motions_dim = d * nv - rep.rank;
    return rep;
}

namespace {

SparsityReport brute_subsets(int n, int r, int d, int l,
                             const std::vector<std::vector<int>>& edge_vertices, int num_edges) {
    require(n <= 12, "brute-force sparsity limited to 12 vertices");
    SparsityReport rep;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size < r) continue;
        int inside = 0;
        for (const auto& verts : edge_vertices) {
            bool all = true;
            for (int v : verts) all = all && (mask >> v & 1);
            inside += all;
        }
        if (inside > d * size - l) {
            std::vector<int> w;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) w.push_back(v);
            rep.sparse = false;
            rep.tight = false;
            rep.violating_set = std::move(w);
            return rep;
        }
    }
    rep.sparse = true;
    rep.tight = num_edges == d * n - l;
    return rep;
}

} // namespace

SparsityReport brute_sparsity(const Multigraph& g, int d, int l) {
    std::vector<std::vector<int>> ev;
    for (const auto& e : g.edges()) ev.push_back({e.u, e.v});
    return brute_subsets(g.num_vertices(), 2, d, l, ev, g.num_edges());
}

SparsityReport brute_sparsity(const Hypergraph& g, int d, int l) {
    int r = g.uniform_rank();
    require(r >= 2, "brute-force sparsity needs uniform edge size");
    return brute_subsets(g.num_vertices(), r, d, l, g.edges(), g.num_edges());
}

int brute_h0(const MotionSheafSpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int nv = spec.base.num_vertices();
    const int ne = spec.base.num_edges();

    // Annihilator rows per vertex subspace, derived with the local solver.
    std::vector<std::vector<std::vector<Rat>>> ann(nv);
    int split = 0;
    for (int v = 0; v < nv; ++v) {
        std::vector<std::vector<Rat>> rows;
        for (int i = 0; i < spec.vertex_subspaces[v].dim(); ++i)
            rows.push_back(spec.vertex_subspaces[v].basis().row(i));
        ann[v] = null_space(rows, n);
        split += spec.vertex_subspaces[v].dim();
    }
    // Edge subspace dims: intersect by stacking annihilators and taking the
    // null space again.
    std::vector<int> edge_dim(ne);
    for (int e = 0; e < ne; ++e) {
        std::vector<std::vector<Rat>> stacked;
        for (int v : spec.base.edge(e)) stacked.insert(stacked.end(), ann[v].begin(), ann[v].end());
        edge_dim[e] = static_cast<int>(null_space(stacked, n).size());
        split += edge_dim[e];
    }

    int stalk_total = 0;
    for (int v = 0; v < nv; ++v) stalk_total += n - spec.vertex_subspaces[v].dim();
    for (int e = 0; e < ne; ++e) stalk_total += n - edge_dim[e];
    require(stalk_total <= budget(), "instance exceeds the oracle budget (see SHEAFRIG_BUDGET)");

    // Unknowns: one representative per vertex and per edge. Condition per
    // incidence: w_e - w_v lies in S(v), i.e. every annihilating form of
    // S(v) kills it.
    const int cols = (nv + ne) * n;
    std::vector<std::vector<Rat>> system;
    for (int e = 0; e < ne; ++e)
        for (int v : spec.base.edge(e))
            for (const auto& form : ann[v]) {
                std::vector<Rat> row(cols, Rat(0));
                for (int j = 0; j < n; ++j) {
                    row[(nv + e) * n + j] += form[j];
                    row[v * n + j] -= form[j];
                }
                system.push_back(std::move(row));
            }
    int nullity = cols - gauss_rank(system);
    return nullity - split;
}

} // namespace oracle
} // namespace sheafrig
