#include "sheafrig/subspace.hpp"

#include "sheafrig/error.hpp"

namespace sheafrig {

Subspace::Subspace(int ambient_dim, const Mat& spanning_rows) : n_(ambient_dim) {
    require(ambient_dim >= 0, "negative ambient dimension");
    require(spanning_rows.rows() == 0 || spanning_rows.cols() == ambient_dim, "basis width mismatch");
    Mat rows = spanning_rows.rows() == 0 ? Mat(0, ambient_dim) : spanning_rows;
    basis_ = row_space_basis(rows);
}

Subspace Subspace::span_of(const std::vector<std::vector<Rat>>& rows, int ambient_dim) {
    Mat m(static_cast<int>(rows.size()), ambient_dim);
    for (size_t i = 0; i < rows.size(); ++i) {
        require(static_cast<int>(rows[i].size()) == ambient_dim, "spanning vector length mismatch");
        m.set_row(static_cast<int>(i), rows[i]);
    }
    return Subspace(ambient_dim, m);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    require(static_cast<int>(v.size()) == n_, "vector length mismatch");
    Mat stacked = basis_;
    stacked.stack_rows(Mat::row_vector(v));
    return rank(stacked) == dim();
}

bool Subspace::contains(const Subspace& o) const {
    require(n_ == o.n_, "ambient dimension mismatch");
    Mat stacked = basis_;
    stacked.stack_rows(o.basis_);
    return rank(stacked) == dim();
}

Mat Subspace::annihilator_basis() const {
    if (dim() == 0) return Mat::identity(n_);
    return kernel_basis(basis_);
}

Subspace Subspace::sum(const Subspace& o) const {
    require(n_ == o.n_, "ambient dimension mismatch");
    Mat stacked = basis_;
    stacked.stack_rows(o.basis_);
    return Subspace(n_, stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
    std::vector<Subspace> both{*this, o};
    return intersect_all(n_, both);
}

Subspace Subspace::intersect_all(int ambient_dim, std::span<const Subspace> spaces) {
    Mat stacked(0, ambient_dim);
    for (const auto& s : spaces) {
        require(s.ambient_dim() == ambient_dim, "ambient dimension mismatch");
        stacked.stack_rows(s.annihilator_basis());
    }
    return Subspace(ambient_dim, kernel_basis(stacked));
}

LinearForm::LinearForm(int ambient_dim, std::vector<Rat> coefficients)
    : n_(ambient_dim), c_(std::move(coefficients)) {
    require(static_cast<int>(c_.size()) == n_, "form length mismatch");
}

bool LinearForm::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Rat LinearForm::operator()(const std::vector<Rat>& v) const {
    require(static_cast<int>(v.size()) == n_, "vector length mismatch");
    Rat acc = 0;
    for (int j = 0; j < n_; ++j)
        if (c_[j] != 0) acc += c_[j] * v[j];
    return acc;
}

bool LinearForm::annihilates(const Subspace& s) const {
    require(s.ambient_dim() == n_, "ambient dimension mismatch");
    for (int i = 0; i < s.dim(); ++i)
        if ((*this)(s.basis().row(i)) != 0) return false;
    return true;
}

Subspace LinearForm::kernel() const {
    return Subspace(n_, kernel_basis(Mat::row_vector(c_)));
}

Mat projection_of(const Subspace& s) {
    const int n = s.ambient_dim();
    if (s.dim() == 0) return Mat::zero(n, n);
    const Mat& b = s.basis();
    Mat gram = b * b.transpose();
    Mat y = solve_square(gram, b);  // (B B^T)^{-1} B
    return b.transpose() * y;
}

Subspace subspace_of(const Mat& p) {
    require(p.rows() == p.cols(), "projection must be square");
    require(p == p.transpose(), "projection must be symmetric");
    require(p * p == p, "projection must be idempotent");
    return Subspace(p.cols(), p);
}

Subspace sample_subspace(int s, int n, Rng& rng) {
    require(0 <= s && s <= n, "need 0 <= s <= n");
    if (s == 0) return Subspace::zero(n);
    for (;;) {
        Mat m(s, n);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rat(static_cast<long>(rng.int_in(-1000000, 1000000)));
        if (rank(m) == s) return Subspace(n, m);
    }
}

LinearForm sample_form(int n, Rng& rng) {
    for (;;) {
        std::vector<Rat> c(n);
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            c[j] = Rat(static_cast<long>(rng.int_in(-1000000, 1000000)));
            nonzero = nonzero || c[j] != 0;
        }
        if (nonzero) return LinearForm(n, std::move(c));
    }
}

LinearForm sample_form_annihilating(const Subspace& s, Rng& rng) {
    Mat ann = s.annihilator_basis();
    require(ann.rows() > 0, "subspace has no nonzero annihilating form");
    const int n = s.ambient_dim();
    for (;;) {
        std::vector<Rat> c(n, Rat(0));
        bool nonzero = false;
        for (int i = 0; i < ann.rows(); ++i) {
            Rat w(static_cast<long>(rng.int_in(-1000000, 1000000)));
            if (w == 0) continue;
            nonzero = true;
            for (int j = 0; j < n; ++j) c[j] += w * ann.at(i, j);
        }
        if (nonzero) return LinearForm(n, std::move(c));
    }
}

std::vector<LinearForm> annihilator_forms(const Subspace& s) {
    Mat ann = s.annihilator_basis();
    std::vector<LinearForm> out;
    for (int i = 0; i < ann.rows(); ++i) out.emplace_back(s.ambient_dim(), ann.row(i));
    return out;
}

} // namespace sheafrig
