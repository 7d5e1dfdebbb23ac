#pragma once

#include "sheafrig/lie_models.hpp"
#include "sheafrig/motion.hpp"

namespace sheafrig {

// Brute-force baselines sharing no elimination code with the main paths.
namespace oracle {

// SHEAFRIG_BUDGET scales the instance caps below (default 200).
int budget();

struct RigidityMatrixReport {
    Mat matrix;       // one row per edge over Q^{d|V|}
    int rank = 0;
    int motions_dim = 0;  // d|V| - rank
};

RigidityMatrixReport rigidity_matrix(const Framework& fw);

SparsityReport brute_sparsity(const Multigraph& g, int d, int l);
SparsityReport brute_sparsity(const Hypergraph& g, int d, int l);

// Section count of a motion sheaf assembled as one dense system over
// representatives, without quotient machinery.
int brute_h0(const MotionSheafSpec& spec);

} // namespace oracle

} // namespace sheafrig
