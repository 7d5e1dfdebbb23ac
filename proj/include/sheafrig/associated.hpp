#pragma once

#include <optional>

#include "sheafrig/motion.hpp"

namespace sheafrig {

// Sheaf data on a multigraph with one-dimensional edge stalks: an
// s-dimensional subspace per vertex and a linear form per edge annihilating
// both endpoint subspaces, with endpoint subspaces meeting trivially along
// every edge. Forms are stored in edge storage order.
struct AssociatedSheafSpec {
    Multigraph base;
    int ambient_dim = 0;
    std::vector<Subspace> vertex_subspaces;
    std::vector<LinearForm> edge_forms;

    void validate() const;
    int subspace_dim() const;
    const LinearForm& form_for_edge_id(int id) const;
};

// The sheaf on the base graph itself: vertex stalks Q^n/S_v in annihilator
// coordinates, edge stalks Q via the form.
CellularSheaf to_sheaf(const AssociatedSheafSpec& spec);

// Sheaf on the graph itself with edge stalks Q^n/(S_u + S_v); has the same
// cohomology as the motion sheaf on the incidence graph.
CellularSheaf collapse_to_graph_sheaf(const MotionSheafSpec& spec);

// Spread each edge of a graph motion spec into n-2s parallel copies carrying
// the echelon annihilator basis of S_u + S_v; cohomology is preserved.
AssociatedSheafSpec expand_to_multigraph(const MotionSheafSpec& spec);

// Computes cohomology along two routes (the cellular sheaf and the
// |E| x n|V| row matrix alpha_e o (Id - P_v)) and insists they agree.
CohomologyReport cohomology_associated(const AssociatedSheafSpec& spec);

// Extension move on an associated sheaf with d = n - s. Replaced edge pairs
// inherit the deleted edge's form, attach edges get `fresh_forms` (sampled
// from the attach vertices' annihilators when not supplied), and the new
// vertex carries the intersection of all d kernels, which must have
// dimension s. Preserves independence; re-verified exactly.
AssociatedSheafSpec extend_associated(const AssociatedSheafSpec& spec, const ExtensionMove& move,
                                      const std::vector<LinearForm>& fresh_forms);
AssociatedSheafSpec extend_associated(const AssociatedSheafSpec& spec, const ExtensionMove& move, Rng& rng);

// Resample so the forms on `edge_indices` become linearly independent while
// h1 keeps its generic value; may rebuild the vertex subspaces inside the
// selected kernels. Requires |selection| <= n-s and at most n-2s selected
// edges at any vertex.
std::optional<AssociatedSheafSpec> find_independent_forms(const AssociatedSheafSpec& spec,
                                                          const std::vector<int>& edge_indices, Rng& rng);

struct IndependentSheafResult {
    std::optional<AssociatedSheafSpec> spec;
    std::optional<std::vector<int>> sparsity_witness;
    bool via_decomposition = false;
};

// Verified h1 = 0 point over an (n-1,n)-sparse multigraph: augments to a
// tight graph, replays its extension decomposition from the two-vertex base,
// then restricts back. Falls back to direct sampling with exact verification
// when the decomposition search runs out of budget.
IndependentSheafResult build_independent_sheaf(const Multigraph& g, int n, Rng& rng);

// Base-case spec on the two-vertex graph with n-2 parallel edges.
AssociatedSheafSpec sample_banana_spec(int n, Rng& rng);

// Random element of the associated family over an arbitrary multigraph.
AssociatedSheafSpec sample_associated_spec(const Multigraph& g, int s, int n, Rng& rng);

} // namespace sheafrig
