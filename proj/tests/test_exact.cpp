#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggp/exact.hpp"

using namespace ggp;

TEST_CASE("rational parsing and adjacency of integers") {
    CHECK(to_string(rat(-24, 7)) == "-24/7");
    CHECK(parse_rat("-24/7") == rat(-24, 7));
    CHECK(parse_rat("3") == Rat(3));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(below_int(Rat(2)) == 1);
    CHECK(above_int(Rat(2)) == 3);
    CHECK(below_int(rat(3, 2)) == 1);
    CHECK(above_int(rat(3, 2)) == 2);
    CHECK(below_int(rat(-3, 2)) == -2);
    CHECK(above_int(rat(-3, 2)) == -1);
}

TEST_CASE("solve_linear identity case") {
    Mat a = Mat::identity(3);
    Vec b(3);
    auto out = solve_linear(a, b);
    REQUIRE(out.kind == SolveOutcome::Unique);
    CHECK(out.x.is_zero());
}

TEST_CASE("solve_linear recovers a random rational solution exactly") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a(4, 4);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) a.at(i, j) = rat(d(rng), 1 + std::abs(d(rng)));
        } while (det(a) == 0);
        Vec x(4);
        for (int i = 0; i < 4; ++i) x[i] = rat(d(rng), 1 + std::abs(d(rng)));
        Vec b = a.mul(x);
        auto out = solve_linear(a, b);
        REQUIRE(out.kind == SolveOutcome::Unique);
        CHECK(out.x == x);
        CHECK(a.mul(out.x) == b); // substitution check
    }
}

TEST_CASE("solve_linear classifies degeneracies") {
    Mat a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 2;
    a.at(1, 1) = 2;
    Vec b(2);
    b[0] = 1;
    b[1] = 3;
    CHECK(solve_linear(a, b).kind == SolveOutcome::NoSolution);
    b[1] = 2;
    CHECK(solve_linear(a, b).kind == SolveOutcome::Underdetermined);
}

TEST_CASE("feasible on 1D strict systems") {
    LinearSystem sys(1);
    sys.add_strict(Vec{Rat(1)}, Rat(1));   // x < 1
    sys.add_strict(Vec{Rat(-1)}, Rat(1));  // -x < 1
    auto w = feasible(sys);
    REQUIRE(w.has_value());
    CHECK((*w)[0] > -1);
    CHECK((*w)[0] < 1);

    LinearSystem bad(1);
    bad.add_strict(Vec{Rat(1)}, Rat(0));
    bad.add_strict(Vec{Rat(-1)}, Rat(0));
    CHECK(!feasible(bad).has_value());
}

TEST_CASE("feasible is deterministic and exact on a mixed system") {
    LinearSystem sys(2);
    sys.add_strict(Vec{Rat(1), Rat(0)}, rat(1, 3));
    sys.add_weak(Vec{Rat(0), Rat(1)}, rat(7, 2));
    sys.add_eq(Vec{Rat(1), Rat(1)}, Rat(2));
    auto w1 = feasible(sys);
    auto w2 = feasible(sys);
    REQUIRE(w1.has_value());
    CHECK(*w1 == *w2);
    CHECK((*w1)[0] < rat(1, 3));
    CHECK((*w1)[1] <= rat(7, 2));
    CHECK((*w1)[0] + (*w1)[1] == 2);
}

TEST_CASE("weak-only systems accept boundary witnesses") {
    LinearSystem sys(1);
    sys.add_weak(Vec{Rat(1)}, Rat(0));
    sys.add_weak(Vec{Rat(-1)}, Rat(0)); // forces x = 0
    auto w = feasible(sys);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 0);
}

TEST_CASE("lattice_hnf basics") {
    std::vector<std::vector<Int>> id{{1, 0}, {0, 1}};
    CHECK(lattice_hnf(id) == id);
    std::vector<std::vector<Int>> diag{{2, 0}, {0, 3}};
    CHECK(lattice_hnf(diag) == diag);
    std::vector<std::vector<Int>> m{{1, 2}, {3, 4}};
    auto h = lattice_hnf(m);
    REQUIRE(h.size() == 2);
    // determinant preserved up to sign by unimodular row operations
    Int dd = h[0][0] * h[1][1] - h[0][1] * h[1][0];
    CHECK((dd == 2 || dd == -2));
    CHECK(h[1][0] == 0); // echelon
}

TEST_CASE("kernel and inverse round trips") {
    Mat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 0;
    m.at(1, 1) = 1;
    m.at(1, 2) = 1;
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(m.mul(ker[0]).is_zero());

    Mat a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 0) = 7;
    a.at(1, 1) = 4;
    CHECK(inverse(a).mul(a) == Mat::identity(2));
}
