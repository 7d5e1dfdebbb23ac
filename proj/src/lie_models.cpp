#include "sheafrig/lie_models.hpp"

namespace sheafrig {

void Framework::validate() const {
    require(static_cast<int>(positions.size()) == graph.num_vertices(), "one position per vertex required");
    for (const auto& p : positions) require(static_cast<int>(p.size()) == dim, "position length mismatch");
}

void Arrangement::validate() const {
    require(static_cast<int>(spaces.size()) == graph.num_vertices(), "one subspace per vertex required");
    for (const auto& a : spaces) {
        require(static_cast<int>(a.point.size()) == dim, "anchor point length mismatch");
        require(a.directions.rows() == 0 || a.directions.cols() == dim, "direction width mismatch");
        require(a.directions.rows() == spaces.front().directions.rows(),
                "arrangement subspaces must have uniform dimension");
        require(rank(a.directions) == a.directions.rows(), "direction rows must be independent");
    }
}

EuclideanModel::EuclideanModel(int d) : d_(d) {
    require(d >= 1, "need spatial dimension >= 1");
    ambient_ = d * (d + 1) / 2;
    if (d == 3) {
        Mat l1(3, 3), l2(3, 3), l3(3, 3);
        l1.at(1, 2) = -1;
        l1.at(2, 1) = 1;
        l2.at(0, 2) = 1;
        l2.at(2, 0) = -1;
        l3.at(0, 1) = -1;
        l3.at(1, 0) = 1;
        skew_basis_ = {l1, l2, l3};
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                Mat b(d, d);
                b.at(j, i) = 1;
                b.at(i, j) = -1;
                skew_basis_.push_back(b);
            }
    }
}

Mat EuclideanModel::algebra_matrix(const std::vector<Rat>& coords) const {
    require(static_cast<int>(coords.size()) == ambient_, "coordinate length mismatch");
    Mat m(d_ + 1, d_ + 1);
    for (int k = 0; k < rotation_dim(); ++k) {
        if (coords[k] == 0) continue;
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) m.at(i, j) += coords[k] * skew_basis_[k].at(i, j);
    }
    for (int i = 0; i < d_; ++i) m.at(i, d_) = coords[rotation_dim() + i];
    return m;
}

std::vector<Rat> EuclideanModel::algebra_coords(const Mat& m) const {
    require(m.rows() == d_ + 1 && m.cols() == d_ + 1, "algebra element shape mismatch");
    std::vector<Rat> coords(ambient_);
    for (int k = 0; k < rotation_dim(); ++k) {
        // Read the coefficient off the basis element's +1 slot.
        for (int i = 0; i < d_ && coords[k] == 0; ++i)
            for (int j = 0; j < d_; ++j)
                if (skew_basis_[k].at(i, j) == 1) {
                    coords[k] = m.at(i, j);
                    break;
                }
    }
    for (int i = 0; i < d_; ++i) coords[rotation_dim() + i] = m.at(i, d_);
    check_internal(algebra_matrix(coords) == m, "matrix is not an algebra element");
    return coords;
}

Subspace EuclideanModel::point_stabilizer_algebra(const std::vector<Rat>& q) const {
    require(static_cast<int>(q.size()) == d_, "point dimension mismatch");
    Mat rows(rotation_dim(), ambient_);
    for (int k = 0; k < rotation_dim(); ++k) {
        rows.at(k, k) = 1;
        std::vector<Rat> t = skew_basis_[k].apply(q);
        for (int i = 0; i < d_; ++i) rows.at(k, rotation_dim() + i) = -t[i];
    }
    return Subspace(ambient_, rows);
}

Subspace EuclideanModel::edge_stabilizer_algebra(const std::vector<Rat>& q1, const std::vector<Rat>& q2) const {
    require(q1 != q2, "edge stabilizer needs distinct points");
    return point_stabilizer_algebra(q1).intersect(point_stabilizer_algebra(q2));
}

Mat EuclideanModel::adjoint_matrix(const Mat& rotation, const std::vector<Rat>& translation) const {
    require(rotation.rows() == d_ && rotation.cols() == d_, "rotation shape mismatch");
    require(rotation.transpose() * rotation == Mat::identity(d_), "rotation must be orthogonal");
    require(static_cast<int>(translation.size()) == d_, "translation length mismatch");
    Mat g(d_ + 1, d_ + 1), ginv(d_ + 1, d_ + 1);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            g.at(i, j) = rotation.at(i, j);
            ginv.at(i, j) = rotation.at(j, i);
        }
    for (int i = 0; i < d_; ++i) {
        g.at(i, d_) = translation[i];
        Rat acc = 0;
        for (int j = 0; j < d_; ++j) acc += rotation.at(j, i) * translation[j];
        ginv.at(i, d_) = -acc;
    }
    g.at(d_, d_) = 1;
    ginv.at(d_, d_) = 1;

    Mat ad(ambient_, ambient_);
    for (int m = 0; m < ambient_; ++m) {
        std::vector<Rat> unit(ambient_, Rat(0));
        unit[m] = 1;
        Mat conj = g * algebra_matrix(unit) * ginv;
        std::vector<Rat> c = algebra_coords(conj);
        for (int i = 0; i < ambient_; ++i) ad.at(i, m) = c[i];
    }
    return ad;
}

Mat EuclideanModel::sample_rotation(Rng& rng) const {
    // Cayley transform of a skew matrix; I + A is always invertible for skew
    // A, so the result is an exact rational orthogonal matrix.
    Mat a(d_, d_);
    for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j) {
            Rat x(static_cast<long>(rng.int_in(-12, 12)), static_cast<long>(rng.int_in(1, 7)));
            x.canonicalize();
            a.at(i, j) = x;
            a.at(j, i) = -x;
        }
    Mat id = Mat::identity(d_);
    return solve_square(id + a, id - a).transpose();
}

Subspace ParallelModel::point_stabilizer_algebra(const std::vector<Rat>& p) const {
    require(static_cast<int>(p.size()) == n_, "point dimension mismatch");
    Mat row(1, ambient_dim());
    row.at(0, 0) = 1;
    for (int i = 0; i < n_; ++i) row.at(0, 1 + i) = -p[i];
    return Subspace(ambient_dim(), row);
}

Subspace ParallelModel::affine_stabilizer_algebra(const AffineSubspace& a) const {
    require(static_cast<int>(a.point.size()) == n_, "anchor point dimension mismatch");
    Mat rows(1 + a.directions.rows(), ambient_dim());
    rows.at(0, 0) = 1;
    for (int i = 0; i < n_; ++i) rows.at(0, 1 + i) = -a.point[i];
    for (int r = 0; r < a.directions.rows(); ++r)
        for (int i = 0; i < n_; ++i) rows.at(1 + r, 1 + i) = a.directions.at(r, i);
    Subspace s(ambient_dim(), rows);
    check_internal(s.dim() == 1 + a.directions.rows(), "degenerate affine stabilizer");
    return s;
}

std::vector<Rat> ParallelModel::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    require(static_cast<int>(x.size()) == ambient_dim() && static_cast<int>(y.size()) == ambient_dim(),
            "bracket operand length mismatch");
    std::vector<Rat> z(ambient_dim(), Rat(0));
    for (int i = 1; i <= n_; ++i) z[i] = x[0] * y[i] - y[0] * x[i];
    return z;
}

Mat ParallelModel::adjoint_matrix(const Rat& lambda, const std::vector<Rat>& x) const {
    require(lambda != 0, "dilation factor must be nonzero");
    require(static_cast<int>(x.size()) == n_, "translation length mismatch");
    Mat ad(ambient_dim(), ambient_dim());
    ad.at(0, 0) = 1;
    for (int i = 0; i < n_; ++i) {
        ad.at(1 + i, 0) = -x[i];
        ad.at(1 + i, 1 + i) = lambda;
    }
    return ad;
}

MotionSheafSpec bar_joint_spec(const EuclideanModel& model, const Framework& fw) {
    fw.validate();
    require(fw.dim == model.spatial_dim(), "framework dimension mismatch");
    for (const auto& e : fw.graph.edges())
        require(fw.positions[e.u] != fw.positions[e.v], "adjacent vertices must have distinct positions");
    MotionSheafSpec spec;
    spec.base = fw.graph.to_hypergraph();
    spec.ambient_dim = model.ambient_dim();
    for (int v = 0; v < fw.graph.num_vertices(); ++v)
        spec.vertex_subspaces.push_back(model.point_stabilizer_algebra(fw.positions[v]));
    return spec;
}

bool collinear(const EuclideanModel& model, const std::vector<Rat>& x, const std::vector<Rat>& y,
               const std::vector<Rat>& z) {
    require(x != y && y != z && x != z, "collinearity needs pairwise distinct points");
    bool algebraic = model.point_stabilizer_algebra(y).sum(model.point_stabilizer_algebra(z))
                         .contains(model.point_stabilizer_algebra(x));
    Mat diff(2, model.spatial_dim());
    for (int i = 0; i < model.spatial_dim(); ++i) {
        diff.at(0, i) = y[i] - x[i];
        diff.at(1, i) = z[i] - x[i];
    }
    bool geometric = rank(diff) <= 1;
    check_internal(algebraic == geometric, "stabilizer and rank collinearity tests disagree");
    return algebraic;
}

MotionSheafSpec parallel_spec(const ParallelModel& model, const Arrangement& arr) {
    arr.validate();
    require(arr.dim == model.spatial_dim(), "arrangement dimension mismatch");
    MotionSheafSpec spec;
    spec.base = arr.graph.to_hypergraph();
    spec.ambient_dim = model.ambient_dim();
    for (const auto& a : arr.spaces) spec.vertex_subspaces.push_back(model.affine_stabilizer_algebra(a));
    return spec;
}

} // namespace sheafrig
