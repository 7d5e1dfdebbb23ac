#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sheafrig/sheaf.hpp"
#include "sheafrig/subspace.hpp"

namespace sheafrig {

// A point of the motion-sheaf family over a hypergraph: one s-dimensional
// subspace of Q^n per vertex. Edges carry the intersection of their vertex
// subspaces; the sheaf itself lives on the incidence graph with quotient
// stalks Q^n / S.
struct MotionSheafSpec {
    Hypergraph base;
    int ambient_dim = 0;
    std::vector<Subspace> vertex_subspaces;

    void validate() const;
    int subspace_dim() const;  // the uniform s
    Subspace edge_subspace(int e) const;
};

// Quotient stalks are coordinatized by the annihilator rows Q_S of S; the
// restriction from the edge side is the unique A with A * Q_{S(e)} = Q_{S(v)}
// and the vertex side is the identity.
CellularSheaf build_motion_sheaf(const MotionSheafSpec& spec);

// Stalk count Sum_x dim M(x) - Sum_{v~e} dim M(v); equals h0 - h1.
int maxwell_defect(const MotionSheafSpec& spec);

// Independent computation of h0 through the sheaf with full stalks Q^n and
// orthogonal projections with kernel S(v) on both sides of every incidence;
// its sections split off the vertex and edge subspaces.
int projection_trick_h0(const MotionSheafSpec& spec);

struct RigidityVerdict {
    int h0 = 0;
    int h1 = 0;
    int trivial_dim = 0;
    bool independent = false;
    bool rigid = false;
    bool minimally_rigid = false;
    std::string note;
};

RigidityVerdict analyze(const MotionSheafSpec& spec);

enum class NecessaryMode { Auto, Sparsity, Exact };

struct NecessaryReport {
    bool holds = false;
    std::optional<std::vector<int>> witness;
    std::string mode;
};

// The subgraph counting bound that independence forces. Sparsity mode checks
// ((r-1)n - rs)|E'| <= (n-s)|V'| - n through the pebble game on the
// multiplied graph; exact mode enumerates subgraphs with trivially
// intersecting vertex subspaces.
NecessaryReport necessary_condition(const MotionSheafSpec& spec, NecessaryMode mode = NecessaryMode::Auto);

MotionSheafSpec sample_generic_spec(const Hypergraph& g, int s, int n, Rng& rng);

MotionSheafSpec restrict_spec(const MotionSheafSpec& spec, const std::vector<bool>& keep_vertex,
                              const std::vector<bool>& keep_edge);

struct MainTheoremTrial {
    std::uint64_t trial = 0;
    int h0 = 0;
    int h1 = 0;
    bool independent = false;
};

struct MainTheoremReport {
    bool sparse = false;  // (n-2)G is (n-1,n)-sparse
    bool agrees = false;
    std::vector<MainTheoremTrial> trials;
};

// Samples specs in M_{1,n} and compares independence against the sparsity of
// the multiplied graph on every trial.
MainTheoremReport check_main_theorem(const Multigraph& g, int n, int trials, Rng& rng);

} // namespace sheafrig
