#pragma once

#include <optional>

#include "sheafrig/graph.hpp"
#include "sheafrig/rng.hpp"

namespace sheafrig {

struct GeneratedTight {
    Multigraph graph;
    std::vector<ExtensionMove> moves;  // replay from the 2-vertex base graph
};

// Random (n-1,n)-tight multigraph on `target_vertices` vertices, grown from
// the graph on two vertices with n-2 parallel edges by (n-1)-dimensional
// k-extensions. Never creates more than n-2 parallel edges per vertex pair,
// which is exactly what keeps every intermediate graph tight.
GeneratedTight generate_tight(int n, int target_vertices, Rng& rng);

struct Decomposition {
    std::vector<ExtensionMove> moves;   // forward moves in replay coordinates
    std::vector<int> vertex_map;        // input vertex -> replay vertex
    std::vector<int> edge_map_input;    // input edge ids ...
    std::vector<int> edge_map_replay;   // ... paired with replay edge ids
    long long nodes_explored = 0;
};

// Exhaustive reverse-move search expressing an (n-1,n)-tight multigraph as a
// k-extension sequence from the 2-vertex base graph. Intended for small
// inputs; returns nothing only when the node budget runs out (with the
// explored count reported through `nodes_explored_out` when given).
std::optional<Decomposition> decompose_tight_full(const Multigraph& g, int n,
                                                  long long max_nodes = 500000,
                                                  long long* nodes_explored_out = nullptr);

std::optional<std::vector<ExtensionMove>> decompose_tight(const Multigraph& g, int n,
                                                          long long max_nodes = 500000);

// Brute-force multigraph isomorphism for small graphs (<= 10 vertices).
bool isomorphic(const Multigraph& a, const Multigraph& b);

} // namespace sheafrig
