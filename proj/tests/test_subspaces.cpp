#include <doctest.h>

#include "sheafrig/lie_models.hpp"
#include "testutil.hpp"

using namespace sheafrig;
using namespace sheafrig::testutil;

TEST_CASE("intersection") {
    Subspace x = line({1, 0, 0}, 3);
    CHECK(x.intersect(x) == x);
    CHECK(x.intersect(line({0, 1, 0}, 3)).dim() == 0);
    CHECK(Subspace::intersect_all(3, {}) == Subspace::full(3));

    // Random pairs of 2-planes in Q^4 meet trivially; cross-check through the
    // rank of the stacked bases.
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Rng sub = rng.child(trial);
        Subspace a = sample_subspace(2, 4, sub);
        Subspace b = sample_subspace(2, 4, sub);
        Mat stacked = a.basis();
        stacked.stack_rows(b.basis());
        int meet = a.intersect(b).dim();
        CHECK(meet == 4 - rank(stacked));
        CHECK(meet == 0);
    }
}

TEST_CASE("sum") {
    Subspace s = line({3, 1, 4}, 3);
    CHECK(s.sum(Subspace::zero(3)) == s);
    Subspace plane = line({1, 0, 0}, 3).sum(line({0, 1, 0}, 3));
    CHECK(plane.dim() == 2);
    CHECK(plane.contains(rats({5, -7, 0})));
    CHECK(!plane.contains(rats({0, 0, 1})));
}

TEST_CASE("dimension formula for sum and intersection") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Rng sub = rng.child(trial);
        int n = 2 + static_cast<int>(sub.below(5));
        int sa = static_cast<int>(sub.below(n + 1));
        int sb = static_cast<int>(sub.below(n + 1));
        Subspace a = sample_subspace(sa, n, sub);
        Subspace b = sample_subspace(sb, n, sub);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("annihilator basis") {
    CHECK(Subspace::zero(2).annihilator_basis().rows() == 2);
    Mat one = line({1, 0, 0}, 3).sum(line({0, 1, 0}, 3)).annihilator_basis();
    REQUIRE(one.rows() == 1);
    CHECK(one.at(0, 0) == 0);
    CHECK(one.at(0, 1) == 0);
    CHECK(one.at(0, 2) != 0);

    // Round trip: the kernel of the stacked annihilator recovers the space.
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        Rng sub = rng.child(trial);
        int n = 2 + static_cast<int>(sub.below(5));
        Subspace s = sample_subspace(1 + static_cast<int>(sub.below(n)), n, sub);
        Mat ann = s.annihilator_basis();
        CHECK(ann.rows() == n - s.dim());
        CHECK(Subspace(n, kernel_basis(ann)) == s);
        for (const auto& form : annihilator_forms(s)) CHECK(form.annihilates(s));
    }
}

TEST_CASE("projection operators") {
    CHECK(projection_of(line({1, 0}, 2)) == Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}});
    CHECK(projection_of(Subspace::full(3)) == Mat::identity(3));
    Mat diag = projection_of(line({1, 1}, 2));
    CHECK(diag == Mat{{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}});

    Mat bad{{Rat(1), Rat(1)}, {Rat(0), Rat(0)}};
    CHECK_THROWS_AS(subspace_of(bad), PreconditionError);

    // Round trips in both directions across (s,n) pairs.
    Rng rng(17);
    int checked = 0;
    for (int s = 1; s <= 3; ++s)
        for (int n = 2; n <= 6; ++n) {
            if (s > n) continue;
            for (int trial = 0; trial < 8; ++trial) {
                Rng sub = rng.child(100 * s + 10 * n + trial);
                Subspace sp = sample_subspace(s, n, sub);
                Mat p = projection_of(sp);
                CHECK(p == p.transpose());
                CHECK(p * p == p);
                CHECK(subspace_of(p) == sp);
                CHECK(projection_of(subspace_of(p)) == p);
                ++checked;
            }
        }
    CHECK(checked >= 100);
}

TEST_CASE("sample_subspace") {
    Rng z(5);
    CHECK(sample_subspace(0, 4, z).dim() == 0);
    Rng f(5);
    CHECK(sample_subspace(4, 4, f) == Subspace::full(4));

    Rng a(123), b(123);
    CHECK(sample_subspace(2, 5, a) == sample_subspace(2, 5, b));

    // Two independent lines in Q^3 meet trivially, across many trials.
    Rng rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
        Rng sub = rng.child(trial);
        Subspace x = sample_subspace(1, 3, sub);
        Subspace y = sample_subspace(1, 3, sub);
        CHECK(x.intersect(y).dim() == 0);
    }
}

TEST_CASE("rank of the planar point stabilizer") {
    EuclideanModel e2(2);
    Subspace stab = e2.point_stabilizer_algebra(rats({4, -7}));
    CHECK(rank(stab.basis()) == 1);
}

TEST_CASE("intersection dimension can only drop off the coincidence locus") {
    // Equal lines have pairwise meets of dimension 1; perturbing to three
    // random distinct lines drops every pairwise meet to 0.
    Subspace shared = line({1, 0, 0}, 3);
    CHECK(shared.intersect(shared).dim() == 1);
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Rng sub = rng.child(trial);
        Subspace a = sample_subspace(1, 3, sub);
        Subspace b = sample_subspace(1, 3, sub);
        Subspace c = sample_subspace(1, 3, sub);
        CHECK(a.intersect(b).dim() <= 1);
        CHECK(a.intersect(b).dim() == 0);
        CHECK(b.intersect(c).dim() == 0);
        CHECK(a.intersect(c).dim() == 0);
    }
}

TEST_CASE("linear forms") {
    LinearForm f(3, rats({1, -2, 0}));
    CHECK(f(rats({2, 1, 9})) == 0);
    CHECK(f.kernel().dim() == 2);
    CHECK(f.annihilates(f.kernel()));
    CHECK_THROWS_AS(LinearForm(3, rats({1, 2})), PreconditionError);
}
