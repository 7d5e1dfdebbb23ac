#pragma once

#include "sheafrig/motion.hpp"

namespace sheafrig {

// Bar-joint framework: a graph with one rational point per vertex.
struct Framework {
    Multigraph graph;
    int dim = 0;
    std::vector<std::vector<Rat>> positions;  // one length-dim point per vertex

    void validate() const;
};

// Affine subspace of Q^n given by a point and direction rows.
struct AffineSubspace {
    std::vector<Rat> point;
    Mat directions;  // s x n, rows independent
};

// Point/subspace arrangement for the dilation-translation group.
struct Arrangement {
    Multigraph graph;
    int dim = 0;                          // spatial dimension n
    std::vector<AffineSubspace> spaces;   // one per vertex, uniform dimension

    void validate() const;
};

// The Euclidean motion group of R^d in coordinates (skew block, translation):
// ambient dimension C(d+1,2). For d = 3 the skew coordinates follow the
// axis-vector convention, so a point stabilizer is {(w, -w x q)}.
class EuclideanModel {
public:
    explicit EuclideanModel(int d);

    int spatial_dim() const { return d_; }
    int ambient_dim() const { return ambient_; }
    int rotation_dim() const { return ambient_ - d_; }

    // (d+1)x(d+1) homogeneous matrix from algebra coordinates and back.
    Mat algebra_matrix(const std::vector<Rat>& coords) const;
    std::vector<Rat> algebra_coords(const Mat& m) const;

    Subspace point_stabilizer_algebra(const std::vector<Rat>& q) const;
    Subspace edge_stabilizer_algebra(const std::vector<Rat>& q1, const std::vector<Rat>& q2) const;

    // Ad(g) on algebra coordinates for g = (cayley(skew), t); exact.
    Mat adjoint_matrix(const Mat& rotation, const std::vector<Rat>& translation) const;
    Mat sample_rotation(Rng& rng) const;  // Cayley transform of a random skew matrix

private:
    int d_;
    int ambient_;
    std::vector<Mat> skew_basis_;
};

// Dilations and translations of R^n in coordinates (l, t_1..t_n); every
// vector subspace of this algebra is a subalgebra.
class ParallelModel {
public:
    explicit ParallelModel(int n) : n_(n) { require(n >= 1, "need spatial dimension >= 1"); }

    int spatial_dim() const { return n_; }
    int ambient_dim() const { return n_ + 1; }

    Subspace point_stabilizer_algebra(const std::vector<Rat>& p) const;
    Subspace affine_stabilizer_algebra(const AffineSubspace& a) const;

    // Bracket of two coordinate vectors: [(l,t),(l',t')] = (0, l t' - l' t).
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    // Ad(lambda, x) acting on coordinates.
    Mat adjoint_matrix(const Rat& lambda, const std::vector<Rat>& x) const;

private:
    int n_;
};

MotionSheafSpec bar_joint_spec(const EuclideanModel& model, const Framework& fw);

// Three pairwise distinct points are collinear exactly when one stabilizer
// algebra is contained in the sum of the other two; asserted against the
// geometric rank test.
bool collinear(const EuclideanModel& model, const std::vector<Rat>& x, const std::vector<Rat>& y,
               const std::vector<Rat>& z);

MotionSheafSpec parallel_spec(const ParallelModel& model, const Arrangement& arr);

// Vertex subspaces Ad(g_v)(base_algebra) for independently sampled rational
// group elements; `sample_adjoint` returns one Ad(g) coordinate matrix.
template <typename SampleAdjoint>
MotionSheafSpec sample_orbit_spec(int ambient_dim, const Subspace& base_algebra, const Hypergraph& g,
                                  SampleAdjoint&& sample_adjoint, Rng& rng) {
    MotionSheafSpec spec;
    spec.base = g;
    spec.ambient_dim = ambient_dim;
    for (int v = 0; v < g.num_vertices(); ++v) {
        Rng sub = rng.child(static_cast<std::uint64_t>(v));
        Mat ad = sample_adjoint(sub);
        spec.vertex_subspaces.push_back(Subspace(ambient_dim, base_algebra.basis() * ad.transpose()));
    }
    return spec;
}

} // namespace sheafrig
