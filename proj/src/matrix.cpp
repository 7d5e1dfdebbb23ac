#include "sheafrig/matrix.hpp"

#include "sheafrig/error.hpp"

namespace sheafrig {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        check_internal(static_cast<int>(r.size()) == cols_, "ragged matrix initializer");
        for (const auto& x : r) data_.push_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::row_vector(const std::vector<Rat>& v) {
    Mat m(1, static_cast<int>(v.size()));
    for (int j = 0; j < m.cols(); ++j) m.at(0, j) = v[j];
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    check_internal(cols_ == o.rows_, "matrix product shape mismatch");
    Mat p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                p.at(i, j) += a * o.at(k, j);
            }
        }
    return p;
}

Mat Mat::operator+(const Mat& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    Mat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> Mat::row(int i) const {
    std::vector<Rat> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void Mat::set_row(int i, const std::vector<Rat>& v) {
    check_internal(static_cast<int>(v.size()) == cols_, "row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& x) const {
    check_internal(static_cast<int>(x.size()) == cols_, "vector length mismatch");
    std::vector<Rat> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

void Mat::stack_rows(const Mat& o) {
    if (rows_ == 0 && cols_ == 0) {
        *this = o;
        return;
    }
    check_internal(cols_ == o.cols_, "stack_rows column mismatch");
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
    rows_ += o.rows_;
}

int rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Clear denominators row by row, then run fraction-free elimination over
    // the integers. Exact divisions only; entry growth stays minor-bounded.
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
    for (int i = 0; i < nr; ++i) {
        BigInt l = 1;
        for (int j = 0; j < nc; ++j) {
            Rat q = m.at(i, j);
            BigInt den = q.get_den();
            l = lcm(l, den);
        }
        for (int j = 0; j < nc; ++j) {
            Rat q = m.at(i, j) * Rat(l);
            q.canonicalize();
            check_internal(q.get_den() == 1, "integerization failed");
            a[i][j] = q.get_num();
        }
    }
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                BigInt t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::vector<int> rref_in_place(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rat lead = m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) /= lead;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Mat kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    Mat basis(m.cols() - static_cast<int>(pivots.size()), m.cols());
    int k = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.at(k, c) = 1;
        for (size_t p = 0; p < pivots.size(); ++p) basis.at(k, pivots[p]) = -r.at(static_cast<int>(p), c);
        ++k;
    }
    rref_in_place(basis);
    return basis;
}

Mat row_space_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref_in_place(r);
    Mat basis(static_cast<int>(pivots.size()), m.cols());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) basis.at(i, j) = r.at(i, j);
    return basis;
}

Mat solve_left_factor(const Mat& b, const Mat& c) {
    check_internal(b.cols() == c.cols(), "solve_left_factor ambient mismatch");
    // Solve X b = c columnwise: [b^T | c^T] reduced once; b^T has full column
    // rank, so the pivots fill exactly the first rows(b) columns when the
    // system is consistent.
    Mat bt = b.transpose();
    Mat ct = c.transpose();
    Mat full(bt.rows(), bt.cols() + ct.cols());
    for (int i = 0; i < bt.rows(); ++i) {
        for (int j = 0; j < bt.cols(); ++j) full.at(i, j) = bt.at(i, j);
        for (int j = 0; j < ct.cols(); ++j) full.at(i, bt.cols() + j) = ct.at(i, j);
    }
    std::vector<int> pivots = rref_in_place(full);
    check_internal(pivots.empty() || pivots.back() < b.rows(), "solve_left_factor: inconsistent system");
    check_internal(static_cast<int>(pivots.size()) == b.rows(), "solve_left_factor: rank-deficient b");
    Mat xt(b.rows(), c.rows());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < c.rows(); ++j) xt.at(i, j) = full.at(i, b.rows() + j);
    return xt.transpose();
}

Mat solve_square(const Mat& a, const Mat& rhs) {
    check_internal(a.rows() == a.cols() && a.rows() == rhs.rows(), "solve_square shape mismatch");
    Mat full(a.rows(), a.cols() + rhs.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) full.at(i, j) = a.at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) full.at(i, a.cols() + j) = rhs.at(i, j);
    }
    std::vector<int> pivots = rref_in_place(full);
    check_internal(static_cast<int>(pivots.size()) == a.rows(), "solve_square: singular matrix");
    Mat y(a.rows(), rhs.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < rhs.cols(); ++j) y.at(i, j) = full.at(i, a.cols() + j);
    return y;
}

} // namespace sheafrig
