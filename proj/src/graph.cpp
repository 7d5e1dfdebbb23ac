#include "sheafrig/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sheafrig {

int Hypergraph::add_edge(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    require(std::adjacent_find(verts.begin(), verts.end()) == verts.end(), "hyperedge repeats a vertex");
    require(verts.size() >= 2, "hyperedge needs at least two vertices");
    require(verts.front() >= 0 && verts.back() < n_, "hyperedge vertex out of range");
    edges_.push_back(std::move(verts));
    return static_cast<int>(edges_.size()) - 1;
}

int Hypergraph::uniform_rank() const {
    if (edges_.empty()) return 2;
    size_t r = edges_.front().size();
    for (const auto& e : edges_)
        if (e.size() != r) return 0;
    return static_cast<int>(r);
}

namespace {

std::vector<std::vector<int>> components_from_adjacency(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[c].push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

} // namespace

std::vector<std::vector<int>> Hypergraph::components() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_)
        for (size_t i = 0; i + 1 < e.size(); ++i) {
            adj[e[i]].push_back(e[i + 1]);
            adj[e[i + 1]].push_back(e[i]);
        }
    return components_from_adjacency(n_, adj);
}

int Multigraph::add_edge(int u, int v) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
    require(u != v, "loops are not allowed");
    edges_.push_back({next_id_, u, v});
    return next_id_++;
}

void Multigraph::remove_edge_by_id(int id) {
    int idx = index_of_edge(id);
    require(idx >= 0, "no edge with the given id");
    edges_.erase(edges_.begin() + idx);
}

const MultiEdge* Multigraph::find_edge(int id) const {
    int idx = index_of_edge(id);
    return idx < 0 ? nullptr : &edges_[idx];
}

int Multigraph::index_of_edge(int id) const {
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return static_cast<int>(i);
    return -1;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

std::vector<int> Multigraph::incident_edge_ids(int v) const {
    std::vector<int> ids;
    for (const auto& e : edges_)
        if (e.u == v || e.v == v) ids.push_back(e.id);
    return ids;
}

int Multigraph::parallel_count(int u, int v) const {
    int c = 0;
    for (const auto& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++c;
    return c;
}

std::vector<std::vector<int>> Multigraph::components() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return components_from_adjacency(n_, adj);
}

Hypergraph Multigraph::to_hypergraph() const {
    Hypergraph h(n_);
    for (const auto& e : edges_) h.add_edge({e.u, e.v});
    return h;
}

Multigraph Multigraph::from_hypergraph(const Hypergraph& h) {
    Multigraph g(h.num_vertices());
    for (const auto& e : h.edges()) {
        require(e.size() == 2, "hypergraph is not 2-uniform");
        g.add_edge(e[0], e[1]);
    }
    return g;
}

Multigraph Multigraph::assemble(int num_vertices, std::vector<MultiEdge> edges) {
    Multigraph g(num_vertices);
    std::set<int> seen;
    for (const auto& e : edges) {
        require(e.u >= 0 && e.u < num_vertices && e.v >= 0 && e.v < num_vertices, "edge endpoint out of range");
        require(e.u != e.v, "loops are not allowed");
        require(seen.insert(e.id).second, "duplicate edge id");
        g.next_id_ = std::max(g.next_id_, e.id + 1);
    }
    g.edges_ = std::move(edges);
    return g;
}

Multigraph Multigraph::complete(int n) {
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph Multigraph::cycle(int n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    Multigraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Multigraph Multigraph::banana(int parallel) {
    require(parallel >= 1, "need at least one edge");
    Multigraph g(2);
    for (int i = 0; i < parallel; ++i) g.add_edge(0, 1);
    return g;
}

IncidenceGraph incidence_graph(const Hypergraph& g) {
    IncidenceGraph ig;
    ig.base_vertices = g.num_vertices();
    ig.base_edges = g.num_edges();
    ig.graph = Multigraph(g.num_vertices() + g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        for (int v : g.edge(e)) ig.graph.add_edge(v, ig.edge_node(e));
    return ig;
}

Multigraph multiply_edges(const Multigraph& g, int a) {
    require(a >= 1, "edge multiplier must be positive");
    Multigraph out(g.num_vertices());
    for (const auto& e : g.edges())
        for (int c = 0; c < a; ++c) out.add_edge(e.u, e.v);
    return out;
}

namespace {

// Pebble game state for (d,l)-sparsity. Each vertex holds pebbles; inserted
// edges are oriented and consume a pebble from their tail.
class PebbleGame {
public:
    PebbleGame(int n, int d, int l) : d_(d), l_(l), pebbles_(n, d), out_(n) {}

    // Attempt to insert edge (u,v); returns false when it would violate
    // sparsity, with `witness` set to the overloaded vertex set.
    bool insert(int u, int v, std::vector<int>& witness) {
        while (pebbles_[u] + pebbles_[v] < l_ + 1) {
            if (!collect(u, v) && !collect(v, u)) {
                witness = reach(u, v);
                return false;
            }
        }
        int tail = pebbles_[u] > 0 ? u : v;
        int head = tail == u ? v : u;
        --pebbles_[tail];
        out_[tail].push_back(head);
        return true;
    }

private:
    // Move one pebble to `root` from a reachable vertex other than root/other.
    bool collect(int root, int other) {
        std::vector<int> parent(pebbles_.size(), -1);
        std::vector<int> stack{root};
        parent[root] = root;
        if (other >= 0) parent[other] = other;  // do not pull from the other endpoint
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : out_[v]) {
                if (parent[w] >= 0) continue;
                parent[w] = v;
                if (pebbles_[w] > 0) {
                    --pebbles_[w];
                    ++pebbles_[root];
                    // Reverse the path root -> ... -> w.
                    int cur = w;
                    while (cur != root) {
                        int p = parent[cur];
                        auto it = std::find(out_[p].begin(), out_[p].end(), cur);
                        out_[p].erase(it);
                        out_[cur].push_back(p);
                        cur = p;
                    }
                    return true;
                }
                stack.push_back(w);
            }
        }
        return false;
    }

    std::vector<int> reach(int u, int v) const {
        std::vector<bool> seen(pebbles_.size(), false);
        std::vector<int> stack{u, v};
        seen[u] = seen[v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : out_[x])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::vector<int> r;
        for (size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) r.push_back(static_cast<int>(i));
        return r;
    }

    int d_, l_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
};

} // namespace

SparsityReport is_sparse(const Multigraph& g, int d, int l) {
    require(d >= 1, "sparsity parameter d must be positive");
    require(l >= 0 && l < 2 * d, "pebble game requires 0 <= l < 2d; use the brute-force oracle otherwise");
    SparsityReport rep;
    PebbleGame game(g.num_vertices(), d, l);
    std::vector<int> witness;
    for (const auto& e : g.edges()) {
        if (!game.insert(e.u, e.v, witness)) {
            rep.sparse = false;
            rep.tight = false;
            rep.violating_set = witness;
            return rep;
        }
    }
    rep.sparse = true;
    rep.tight = g.num_edges() == d * g.num_vertices() - l;
    return rep;
}

SparsityReport is_sparse(const Hypergraph& g, int d, int l) {
    int r = g.uniform_rank();
    require(r >= 2, "hypergraph sparsity needs uniform edge size");
    require(l <= d * r - 1, "need l <= d*r - 1");
    require(g.num_vertices() <= 20, "subset enumeration limited to 20 vertices");
    const int n = g.num_vertices();
    SparsityReport rep;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size < r) continue;
        int inside = 0;
        for (const auto& e : g.edges()) {
            bool all = true;
            for (int v : e)
                if (!(mask >> v & 1)) {
                    all = false;
                    break;
                }
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
    rep.tight = g.num_edges() == d * g.num_vertices() - l;
    return rep;
}

ExtensionResult apply_extension(const Multigraph& g, const ExtensionMove& m) {
    const int d = m.dim_d, k = m.order_k;
    require(0 <= k && k <= d, "need 0 <= k <= d");
    require(static_cast<int>(m.deleted_edge_ids.size()) == k, "move must delete exactly k edges");
    require(static_cast<int>(m.attach_vertices.size()) == d - k, "move must attach exactly d-k edges");
    std::set<int> distinct(m.deleted_edge_ids.begin(), m.deleted_edge_ids.end());
    require(static_cast<int>(distinct.size()) == k, "deleted edges must be pairwise distinct");

    std::vector<std::pair<int, int>> deleted_endpoints;
    for (int id : m.deleted_edge_ids) {
        const MultiEdge* e = g.find_edge(id);
        require(e != nullptr, "deleted edge does not exist");
        deleted_endpoints.emplace_back(e->u, e->v);
    }
    for (int v : m.attach_vertices) require(v >= 0 && v < g.num_vertices(), "attach vertex does not exist");

    ExtensionResult res{g, -1, {}};
    for (int id : m.deleted_edge_ids) res.graph.remove_edge_by_id(id);
    res.new_vertex = res.graph.add_vertex();
    require(m.new_vertex < 0 || m.new_vertex == res.new_vertex, "unexpected new-vertex id");
    for (const auto& [u, uprime] : deleted_endpoints) {
        res.new_edge_ids.push_back(res.graph.add_edge(u, res.new_vertex));
        res.new_edge_ids.push_back(res.graph.add_edge(uprime, res.new_vertex));
    }
    for (int v : m.attach_vertices) res.new_edge_ids.push_back(res.graph.add_edge(v, res.new_vertex));
    return res;
}

std::string to_dot(const Multigraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) os << "  v" << v << ";\n";
    for (const auto& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << " [label=\"e" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const IncidenceGraph& ig) {
    std::ostringstream os;
    os << "graph I {\n";
    for (int v = 0; v < ig.base_vertices; ++v) os << "  v" << v << " [shape=circle];\n";
    for (int e = 0; e < ig.base_edges; ++e) os << "  e" << e << " [shape=box];\n";
    for (const auto& inc : ig.graph.edges()) os << "  v" << inc.u << " -- e" << (inc.v - ig.base_vertices) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace sheafrig
