#include <doctest.h>

#include "sheafrig/matrix.hpp"
#include "sheafrig/rng.hpp"

using namespace sheafrig;

TEST_CASE("rank basics") {
    CHECK(rank(Mat::zero(3, 4)) == 0);
    CHECK(rank(Mat::identity(5)) == 5);
    Mat m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rank(m) == 1);
    Mat frac{{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 5)}};
    CHECK(rank(frac) == 2);
}

TEST_CASE("rref and kernel") {
    Mat m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
    Mat k = kernel_basis(m);
    CHECK(k.rows() == 2);
    for (int i = 0; i < k.rows(); ++i) {
        std::vector<Rat> img = m.apply(k.row(i));
        for (const auto& x : img) CHECK(x == 0);
    }
    CHECK(kernel_basis(Mat::identity(4)).rows() == 0);
}

TEST_CASE("solve_left_factor reproduces the factor") {
    Mat b{{Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(-1)}};
    Mat x{{Rat(3), Rat(5)}, {Rat(-1), Rat(2)}, {Rat(0), Rat(7)}};
    Mat c = x * b;
    Mat solved = solve_left_factor(b, c);
    CHECK(solved == x);
}

TEST_CASE("solve_square") {
    Mat a{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    Mat rhs{{Rat(3)}, {Rat(2)}};
    Mat y = solve_square(a, rhs);
    CHECK(a * y == rhs);
}

TEST_CASE("rank is invariant under row operations") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + static_cast<int>(rng.below(4));
        int c = 2 + static_cast<int>(rng.below(4));
        Mat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Rat(static_cast<long>(rng.int_in(-5, 5)));
        int base = rank(m);
        Mat shuffled = m;
        for (int i = 0; i + 1 < r; ++i)
            for (int j = 0; j < c; ++j) shuffled.at(i, j) += Rat(static_cast<long>(rng.int_in(-3, 3))) * m.at(i + 1, j);
        CHECK(rank(shuffled) == base);
    }
}
