#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggp/chevalley.hpp"
#include "ggp/rootsys.hpp"

using namespace ggp;

TEST_CASE("root counts and highest roots for the classical ranks") {
    struct Row {
        Lie t;
        int rank;
        int nroots;
        int ht_theta;
    };
    // |Phi| from the classical formulas; ht(theta) = h - 1
    for (const Row& r : {Row{Lie::A, 1, 2, 1}, Row{Lie::A, 2, 6, 2}, Row{Lie::A, 5, 30, 5},
                         Row{Lie::B, 3, 18, 5}, Row{Lie::C, 3, 18, 5}, Row{Lie::D, 4, 24, 5},
                         Row{Lie::G, 2, 12, 5}, Row{Lie::F, 4, 48, 11}, Row{Lie::E, 6, 72, 11},
                         Row{Lie::E, 7, 126, 17}}) {
        RootSystem rs = build_root_system(r.t, r.rank);
        CHECK(static_cast<int>(rs.roots.size()) == r.nroots);
        CHECK(rs.height(rs.theta) == r.ht_theta);
    }
}

TEST_CASE("A1 is just {+-alpha}") {
    RootSystem rs = build_root_system(Lie::A, 1);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0] == std::vector<int>{1});
    CHECK(rs.roots[1] == std::vector<int>{-1});
}

TEST_CASE("G2 theta coefficients are (3,2)") {
    RootSystem rs = build_root_system(Lie::G, 2);
    CHECK(rs.roots[rs.theta] == std::vector<int>{3, 2});
}

TEST_CASE("Gram matrix is symmetric, positive definite and W-invariant") {
    for (auto [t, r] : {std::pair<Lie, int>{Lie::G, 2}, {Lie::F, 4}, {Lie::B, 3}, {Lie::C, 3}}) {
        RootSystem rs = build_root_system(t, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) CHECK(rs.gram.at(i, j) == rs.gram.at(j, i));
        // leading principal minors positive
        for (int k = 1; k <= r; ++k) {
            Mat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = rs.gram.at(i, j);
            CHECK(det(sub) > 0);
        }
        // (w a, w b) = (a, b) for simple reflections on random roots
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(rs.roots.size()) - 1);
        for (int trial = 0; trial < 40; ++trial) {
            int a = pick(rng), b = pick(rng);
            int s = trial % r;
            CHECK(rs.inner_roots(a, b) == rs.inner_roots(rs.refl[s][a], rs.refl[s][b]));
        }
    }
}

TEST_CASE("root string property: (a,b) > 0 and a != b implies a - b is a root or zero") {
    for (auto [t, r] : {std::pair<Lie, int>{Lie::G, 2}, {Lie::F, 4}, {Lie::A, 3}, {Lie::D, 4}}) {
        RootSystem rs = build_root_system(t, r);
        int n = static_cast<int>(rs.roots.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || rs.inner_roots(a, b) <= 0) continue;
                std::vector<int> d(r);
                bool zero = true;
                for (int i = 0; i < r; ++i) {
                    d[i] = rs.roots[a][i] - rs.roots[b][i];
                    zero = zero && d[i] == 0;
                }
                CHECK((zero || rs.root_index(d) >= 0));
            }
    }
}

TEST_CASE("dominant_rep basics") {
    RootSystem rs = build_root_system(Lie::A, 1);
    Vec v(1);
    v[0] = -1; // -alpha_1
    auto [dom, w] = dominant_rep(rs, v);
    CHECK(dom[0] == 1);
    CHECK(w.gens == std::vector<int>{0});

    // already dominant: untouched
    Vec u(1);
    u[0] = 1;
    auto [dom2, w2] = dominant_rep(rs, u);
    CHECK(dom2 == u);
    CHECK(w2.gens.empty());
}

TEST_CASE("dominant representative is independent of the reflection order") {
    RootSystem rs = build_root_system(Lie::F, 4);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 25; ++trial) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = rat(d(rng), 1 + (trial % 3));
        auto [dom, w] = dominant_rep(rs, v);
        for (int i = 0; i < 4; ++i) CHECK(rs.inner_simple(dom, i) >= 0);
        CHECK(apply_word(rs, w, v) == dom);
        // randomized-order variant reaches the same representative
        Vec u = v;
        std::uniform_int_distribution<int> pick(0, 3);
        for (int guard = 0; guard < 10000; ++guard) {
            std::vector<int> neg;
            for (int i = 0; i < 4; ++i)
                if (rs.inner_simple(u, i) < 0) neg.push_back(i);
            if (neg.empty()) break;
            u = rs.reflect(neg[pick(rng) % neg.size()], u);
        }
        CHECK(u == dom);
    }
}

TEST_CASE("Chevalley constants satisfy the defining |N| = p + 1 and Jacobi") {
    for (auto [t, r] : {std::pair<Lie, int>{Lie::A, 2}, {Lie::G, 2}, {Lie::B, 2}, {Lie::C, 3},
                        {Lie::D, 4}, {Lie::F, 4}}) {
        RootSystem rs = build_root_system(t, r);
        ChevalleyData cd = build_chevalley(rs);
        int n = static_cast<int>(rs.roots.size());
        // antisymmetry and the root-string magnitude
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<int> sum(r);
                for (int i = 0; i < r; ++i) sum[i] = rs.roots[a][i] + rs.roots[b][i];
                if (rs.root_index(sum) < 0) continue;
                int nab = cd.N(a, b);
                CHECK(nab == -cd.N(b, a));
                // p = largest k with b - k a a root
                std::vector<int> v = rs.roots[b];
                int p = 0;
                for (;;) {
                    for (int i = 0; i < r; ++i) v[i] -= rs.roots[a][i];
                    if (rs.root_index(v) < 0) break;
                    ++p;
                }
                CHECK(std::abs(nab) == p + 1);
            }
        // Jacobi identity over the whole basis
        int dim = chev_dim(rs);
        auto bracket_vec = [&](int x, const std::vector<std::pair<int, Rat>>& ys) {
            std::map<int, Rat> acc;
            for (auto& [y, cy] : ys)
                for (auto& [z, cz] : bracket_basis(cd, x, y)) acc[z] += cy * cz;
            std::vector<std::pair<int, Rat>> out;
            for (auto& [k, vv] : acc)
                if (vv != 0) out.emplace_back(k, vv);
            return out;
        };
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> pick(0, dim - 1);
        int checks = t == Lie::F ? 300 : 2000;
        for (int trial = 0; trial < checks; ++trial) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            auto xyz = bracket_vec(x, bracket_basis(cd, y, z));
            auto xy_z = bracket_vec(y, bracket_basis(cd, x, z));
            std::map<int, Rat> lhs;
            for (auto& [k, v] : xyz) lhs[k] += v;
            for (auto& [k, v] : xy_z) lhs[k] -= v;
            // [[x,y],z] = -[z,[x,y]]
            for (auto& [w, cw] : bracket_basis(cd, x, y))
                for (auto& [k, v] : bracket_basis(cd, z, w)) lhs[k] += cw * v;
            for (auto& [k, v] : lhs) CHECK(v == 0);
        }
    }
}

TEST_CASE("Dynkin grading of a principal-in-Levi nilpotent is a good grading") {
    RootSystem rs = build_root_system(Lie::A, 3);
    ChevalleyData cd = build_chevalley(rs);
    // J = {0,1,2}: the principal nilpotent; h has all labels 2
    Vec h(3);
    // solve (alpha_j, h) = 2: A3 principal h = 3a1 + 4a2 + 3a3
    h[0] = 3;
    h[1] = 4;
    h[2] = 3;
    auto check = ad_rank_check(cd, {0, 1, 2}, h);
    CHECK(check.good);
    CHECK(check.dim_centralizer == 3);
    CHECK(check.dim_window == check.dim_centralizer);
}
