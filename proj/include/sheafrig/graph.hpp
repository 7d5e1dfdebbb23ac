#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheafrig/error.hpp"

namespace sheafrig {

// Hypergraph on vertices 0..n-1. Hyperedges are duplicate-free vertex sets of
// size >= 2, stored sorted; the edge list itself may contain repeats.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(int num_vertices) : n_(num_vertices) { require(num_vertices >= 0, "negative vertex count"); }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_[i]; }

    int add_edge(std::vector<int> verts);

    // Common uniform edge size, or 0 when edges have mixed sizes.
    int uniform_rank() const;

    // Components: maximal vertex sets connected through shared hyperedges.
    std::vector<std::vector<int>> components() const;
    bool connected() const { return components().size() <= 1; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

struct MultiEdge {
    int id;
    int u;
    int v;
};

// Multigraph on vertices 0..n-1 with stable edge ids; parallel edges are
// distinct entries, loops are rejected everywhere.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int num_vertices) : n_(num_vertices) { require(num_vertices >= 0, "negative vertex count"); }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<MultiEdge>& edges() const { return edges_; }
    const MultiEdge& edge_at(int index) const { return edges_[index]; }

    int add_vertex() { return n_++; }
    int add_edge(int u, int v);
    void remove_edge_by_id(int id);
    const MultiEdge* find_edge(int id) const;
    int index_of_edge(int id) const;

    int degree(int v) const;
    std::vector<int> incident_edge_ids(int v) const;
    int parallel_count(int u, int v) const;

    std::vector<std::vector<int>> components() const;
    bool connected() const { return components().size() <= 1; }

    Hypergraph to_hypergraph() const;
    static Multigraph from_hypergraph(const Hypergraph& h);
    // Rebuild from an explicit edge list with ids preserved.
    static Multigraph assemble(int num_vertices, std::vector<MultiEdge> edges);
    static Multigraph complete(int n);
    static Multigraph cycle(int n);
    // Two vertices joined by `parallel` parallel edges.
    static Multigraph banana(int parallel);

private:
    int n_ = 0;
    int next_id_ = 0;
    std::vector<MultiEdge> edges_;
};

// Bipartite incidence structure of a hypergraph: nodes are the vertices of
// the hypergraph followed by its edges, and the node-graph edges are the
// incidences (v, e) with v in e. The two incidence signs at an incidence are
// opposite; the vertex side carries +1.
struct IncidenceGraph {
    Multigraph graph;  // node 0..V-1 = hypergraph vertices, V..V+E-1 = hyperedges
    int base_vertices = 0;
    int base_edges = 0;

    int vertex_node(int v) const { return v; }
    int edge_node(int e) const { return base_vertices + e; }
    bool is_vertex_node(int node) const { return node < base_vertices; }
    int sign_at(int node, const MultiEdge& incidence) const {
        require(incidence.u == node || incidence.v == node, "node not on incidence");
        return is_vertex_node(node) ? +1 : -1;
    }
};

IncidenceGraph incidence_graph(const Hypergraph& g);

// Multigraph with `a` parallel copies of every edge; copy c of the i-th input
// edge becomes edge index a*i + c.
Multigraph multiply_edges(const Multigraph& g, int a);

struct SparsityReport {
    bool sparse = false;
    bool tight = false;
    std::optional<std::vector<int>> violating_set;
};

// (d,l)-sparsity via the pebble game; valid for 0 <= l < 2d.
SparsityReport is_sparse(const Multigraph& g, int d, int l);

// Hypergraph sparsity by subset enumeration (requires a uniform rank r and
// l <= d*r - 1; subsets of size >= r are counted).
SparsityReport is_sparse(const Hypergraph& g, int d, int l);

// A d-dimensional k-extension: delete k edges e_j = {u_j, u_j'}, add a new
// vertex v*, join it back to every deleted endpoint, and attach d-k further
// edges. The new edges are created in the order f_1..f_{d+k}: the pair
// (v* u_j, v* u_j') replacing e_j comes first for each j, then the attach
// edges v* v_j.
struct ExtensionMove {
    int dim_d = 0;
    int order_k = 0;
    std::vector<int> deleted_edge_ids;  // size k
    std::vector<int> attach_vertices;   // size d-k, repeats allowed
    int new_vertex = -1;                // assigned on application when < 0
};

struct ExtensionResult {
    Multigraph graph;
    int new_vertex;
    std::vector<int> new_edge_ids;  // f_1..f_{d+k} in construction order
};

ExtensionResult apply_extension(const Multigraph& g, const ExtensionMove& m);

std::string to_dot(const Multigraph& g);
std::string to_dot(const IncidenceGraph& ig);

} // namespace sheafrig
