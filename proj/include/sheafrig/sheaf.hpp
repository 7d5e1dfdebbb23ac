#pragma once

#include <array>
#include <vector>

#include "sheafrig/graph.hpp"
#include "sheafrig/matrix.hpp"
#include "sheafrig/rng.hpp"

namespace sheafrig {

// Cellular sheaf on a multigraph: a stalk dimension per cell and one
// restriction matrix per vertex-edge incidence, taking vertex stalks into
// edge stalks. The coboundary assembles blocks [v:e] * r^v_e; the two signs
// on an edge are opposite, and cohomology does not depend on the choice.
struct CellularSheaf {
    Multigraph base;
    std::vector<int> vertex_dim;                 // per base vertex
    std::vector<int> edge_dim;                   // per base edge, in storage order
    std::vector<std::array<Mat, 2>> restriction; // per edge: maps at [u, v]
    std::vector<std::array<int, 2>> sign;        // per edge: signs at [u, v]

    void validate() const;
    int total_vertex_dim() const;
    int total_edge_dim() const;
    // Offsets of each cell's block in the coboundary coordinates.
    std::vector<int> vertex_offsets() const;
    std::vector<int> edge_offsets() const;

    // Same sheaf with freshly randomized (still opposite) orientation signs.
    CellularSheaf with_random_orientation(Rng& rng) const;
};

struct CohomologyReport {
    int h0 = 0;
    int h1 = 0;
    int coboundary_rank = 0;
    Mat sections;  // rows = echelon basis of ker d (empty unless requested)
};

Mat coboundary(const CellularSheaf& f);

CohomologyReport cohomology(const CellularSheaf& f, bool with_sections = false);

CellularSheaf constant_sheaf(const Multigraph& base, int v_dim);

// Subgraph selector; kept edges must keep both endpoints.
struct SubgraphSelector {
    std::vector<bool> keep_vertex;
    std::vector<bool> keep_edge;

    static SubgraphSelector all(const Multigraph& g);
    static SubgraphSelector edges_only(const Multigraph& g, const std::vector<int>& edge_indices);
    void validate(const Multigraph& g) const;
};

enum class RestrictKind { OnSubgraph = 1, ZeroExtended = 2 };

// Kind 1 lives on the subgraph, kind 2 on the original base with zero stalks
// outside the subgraph; the two have the same cohomology.
CellularSheaf restrict_sheaf(const CellularSheaf& f, const SubgraphSelector& sub, RestrictKind kind);

} // namespace sheafrig
