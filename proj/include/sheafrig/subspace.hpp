#pragma once

#include <span>
#include <vector>

#include "sheafrig/matrix.hpp"
#include "sheafrig/rng.hpp"

namespace sheafrig {

// Linear subspace of Q^n, stored as a reduced-row-echelon basis so that two
// subspaces are equal exactly when their stored bases are.
class Subspace {
public:
    Subspace() = default;
    // Canonicalizes the span of the given rows.
    Subspace(int ambient_dim, const Mat& spanning_rows);

    static Subspace zero(int ambient_dim) { return Subspace(ambient_dim, Mat(0, ambient_dim)); }
    static Subspace full(int ambient_dim) { return Subspace(ambient_dim, Mat::identity(ambient_dim)); }
    static Subspace span_of(const std::vector<std::vector<Rat>>& rows, int ambient_dim);

    int ambient_dim() const { return n_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& o) const;

    // Rows form the canonical basis of the annihilator { a : a(s)=0 for s in this }.
    Mat annihilator_basis() const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // Intersection of a family; the empty family gives the full space.
    static Subspace intersect_all(int ambient_dim, std::span<const Subspace> spaces);

private:
    int n_ = 0;
    Mat basis_;  // dim x n, RREF
};

// Element of the dual space, a length-n coefficient row.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(int ambient_dim, std::vector<Rat> coefficients);

    int ambient_dim() const { return n_; }
    const std::vector<Rat>& coefficients() const { return c_; }
    bool is_zero() const;

    Rat operator()(const std::vector<Rat>& v) const;
    bool annihilates(const Subspace& s) const;
    Subspace kernel() const;

    bool operator==(const LinearForm& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    int n_ = 0;
    std::vector<Rat> c_;
};

// Orthogonal projection with image `s` (standard inner product on Q^n):
// P = B^T (B B^T)^{-1} B. Exactly symmetric and idempotent with trace dim(s).
Mat projection_of(const Subspace& s);

// Inverse direction; validates P = P^T and P^2 = P exactly.
Subspace subspace_of(const Mat& p);

// Random s-dimensional subspace with integer basis entries drawn uniformly
// from [-10^6, 10^6], resampled until the rows are independent.
Subspace sample_subspace(int s, int n, Rng& rng);

// Random nonzero form with entries in the same box.
LinearForm sample_form(int n, Rng& rng);

// Random nonzero form annihilating `s` (a random combination of the
// annihilator basis).
LinearForm sample_form_annihilating(const Subspace& s, Rng& rng);

std::vector<LinearForm> annihilator_forms(const Subspace& s);

} // namespace sheafrig
