#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ggp/chevalley.hpp"
#include "ggp/grading.hpp"

using namespace ggp;

namespace {

const std::vector<int> kE7J{0, 2, 4, 5, 6};

NilpotentDatum e7_a3a2() {
    NilpotentDatum nd;
    nd.J = kE7J;
    nd.labels = {2, 2, 2, 2, 2};
    return nd;
}

std::vector<long> seq_of(const Sl2Decomposition& dec, int e) {
    std::vector<long> out;
    for (auto& [i, m] : dec.mult[e])
        for (long k = 0; k < m; ++k) out.push_back(i);
    return out;
}

} // namespace

TEST_CASE("solve_h: trivial and rank-2 cases") {
    RootSystem a2 = build_root_system(Lie::A, 2);
    NilpotentDatum none{{}, {}};
    CHECK(solve_h(a2, none).is_zero());
    NilpotentDatum nd{{0}, {2}};
    Vec h = solve_h(a2, nd);
    CHECK(a2.inner_simple(h, 0) == 2);
    CHECK(a2.inner_simple(h, 1) == -1);
    CHECK(h[1] == 0); // h in span(Delta_J)
}

TEST_CASE("Example eg2: labelled diagram 2 2 -5 2 2 2 / 0 in paper order") {
    RootSystem rs = build_root_system(Lie::E, 7);
    Vec h = solve_h(rs, e7_a3a2());
    std::vector<Rat> expect{2, 0, 2, -5, 2, 2, 2}; // Bourbaki order
    for (int i = 0; i < 7; ++i) CHECK(rs.inner_simple(h, i) == expect[i]);
}

TEST_CASE("Example eg2: all seven multiplicity sequences match the paper") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    Vec h = solve_h(rs, e7_a3a2());
    Sl2Decomposition dec = sl2_multiplicities(rr, h);
    std::map<std::vector<int>, std::vector<long>> expect{
        {{1, 0}, {0}},          {{0, 1}, {1, 3, 5}},    {{1, 1}, {1, 3, 5}},
        {{1, 2}, {2, 2, 4, 6}}, {{1, 3}, {3}},          {{2, 3}, {3}},
        {{2, 4}, {2}},
    };
    for (int e : rr.positives) {
        auto it = expect.find(rr.elems[e].icoords);
        REQUIRE(it != expect.end());
        CHECK(seq_of(dec, e) == it->second);
    }
    // d values: (1,2,2,3,4,4,3) in the paper's listing order
    std::map<std::vector<int>, int> dexp{{{1, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 2}, {{1, 2}, 3},
                                         {{1, 3}, 4}, {{2, 3}, 4}, {{2, 4}, 3}};
    for (int e : rr.positives) CHECK(dec.d[e] == dexp[rr.elems[e].icoords]);

    // total dimension bookkeeping: sum over fibers of sl2 module sizes
    long total = 0;
    for (size_t e = 0; e < rr.elems.size(); ++e)
        for (auto& [i, m] : dec.mult[e]) total += m * (i + 1);
    for (auto& [i, m] : dec.zero_mult) total += m * (i + 1);
    CHECK(total == 133);
}

TEST_CASE("Example eg2: component data A1 + T1, W_e = Z_e x W_e^circ of order 4") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    Vec h = solve_h(rs, e7_a3a2());
    Sl2Decomposition dec = sl2_multiplicities(rr, h);
    RestrictedWeyl rw = restricted_weyl(rs, kE7J, 1000000);
    REQUIRE(rw.elements_enumerated);
    CHECK(rw.order == 4);
    CHECK(rw.orbit_states == 725760);
    ComponentData cd = component_data(rr, dec, rw.elements);
    REQUIRE(cd.delta_circ.size() == 1);
    CHECK(rr.elems[cd.delta_circ[0]].icoords == std::vector<int>{1, 0});
    CHECK(cd.w_circ.size() == 2);
    CHECK(cd.z_e.size() == 2);
    CHECK(cd.z_e.size() * cd.w_circ.size() == rw.elements.size());
    // W^J here is S2 x S2: every element an involution
    for (const Mat& g : rw.elements) CHECK(g.mul(g) == Mat::identity(2));
}

TEST_CASE("Example eg3: polytope bounds, pruning, the lone integral point") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    Vec h = solve_h(rs, e7_a3a2());
    Sl2Decomposition dec = sl2_multiplicities(rr, h);
    GoodGradingPolytope poly = polytope(rr, dec);

    std::map<std::vector<int>, Rat> rays;
    for (const auto& rb : poly.ray_bounds) rays[rr.rays[rb.ray].primitive] = rb.bound;
    std::map<std::vector<int>, Rat> expect{
        {{1, 0}, Rat(1)}, {{0, 1}, Rat(2)},      {{1, 1}, Rat(2)},
        {{1, 2}, rat(3, 2)}, {{1, 3}, Rat(4)},   {{2, 3}, Rat(4)},
    };
    CHECK(rays == expect);

    std::map<std::vector<int>, Rat> irr;
    for (const auto& rb : poly.irredundant) irr[rr.rays[rb.ray].primitive] = rb.bound;
    std::map<std::vector<int>, Rat> irr_expect{{{1, 0}, Rat(1)}, {{1, 2}, rat(3, 2)}};
    CHECK(irr == irr_expect);

    auto pts = integral_points(poly);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].is_zero());

    // witness from the example: p = 0 is interior
    CHECK(polytope_contains(poly, Vec(2)));
}

TEST_CASE("characteristic of the Dynkin grading lies in [0,2]") {
    RootSystem rs = build_root_system(Lie::E, 7);
    Vec h = solve_h(rs, e7_a3a2());
    Characteristic c = characteristic(rs, h, Vec(rs.rank));
    for (const Rat& x : c.labels) {
        CHECK(x >= 0);
        CHECK(x <= 2);
    }
}

TEST_CASE("adjacency: reflexive, symmetric, and the interval criterion") {
    std::vector<Rat> a{rat(1, 2), Rat(0), Rat(1)};
    CHECK(adjacent_evals(a, a));
    std::vector<Rat> b{Rat(1), Rat(0), Rat(1)};
    CHECK(adjacent_evals(a, b));
    CHECK(adjacent_evals(b, a));
    std::vector<Rat> c{rat(3, 2), Rat(0), Rat(1)};
    CHECK(adjacent_evals(b, c) == adjacent_evals(c, b));
    std::vector<Rat> d{Rat(2), Rat(0), Rat(1)};
    CHECK(!adjacent_evals(a, d)); // 1/2 and 2 do not share a unit interval
    // integral points: |difference| <= 1
    std::vector<Rat> e{Rat(1), Rat(1), Rat(0)};
    std::vector<Rat> f{Rat(0), Rat(2), Rat(0)};
    CHECK(!adjacent_evals(e, f));
    std::vector<Rat> g{Rat(0), Rat(1), Rat(1)};
    CHECK(adjacent_evals(e, g));
}

TEST_CASE("W_e invariance: d(w alpha) = d(alpha) for the generators") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    Vec h = solve_h(rs, e7_a3a2());
    Sl2Decomposition dec = sl2_multiplicities(rr, h);
    RestrictedWeyl rw = restricted_weyl(rs, kE7J, 1000000);
    for (const Mat& g : rw.gens)
        for (size_t e = 0; e < rr.elems.size(); ++e) {
            Vec v(rr.m);
            for (int k = 0; k < rr.m; ++k) v[k] = rr.elems[e].icoords[k];
            Vec img = g.mul(v);
            std::vector<int> ic(rr.m);
            for (int k = 0; k < rr.m; ++k) ic[k] = static_cast<int>(img[k].get_num().get_si());
            int ie = rr.elem_index(ic);
            REQUIRE(ie >= 0);
            CHECK(dec.d[ie] == dec.d[e]);
        }
}

TEST_CASE("distinguished label enumeration in G2 finds the regular and subregular orbits") {
    RootSystem rs = build_root_system(Lie::G, 2);
    auto full = distinguished_labels(rs, {0, 1});
    REQUIRE(full.size() == 2);
    std::set<std::vector<int>> labels;
    for (const auto& nd : full) labels.insert(nd.labels);
    // alpha_1 short, alpha_2 long: the subregular orbit has label 2 on the
    // long root only
    CHECK(labels == std::set<std::vector<int>>{{2, 2}, {0, 2}});
    CHECK(distinguished_labels(rs, {0}).size() == 1); // principal in the A1 Levi
    CHECK(distinguished_labels(rs, {1}).size() == 1);
    CHECK(levi_orbit_dim(rs, full[0]) != levi_orbit_dim(rs, full[1]));
}

TEST_CASE("G2: every nilpotent has an edgeless adjacency graph") {
    RootSystem rs = build_root_system(Lie::G, 2);
    for (unsigned mask = 0; mask < 4; ++mask) {
        std::vector<int> J;
        for (int i = 0; i < 2; ++i)
            if ((mask >> i) & 1) J.push_back(i);
        for (const NilpotentDatum& nd : distinguished_labels(rs, J)) {
            RestrictedRootSystem rr = restrict_roots(rs, nd.J);
            Vec h = solve_h(rs, nd);
            Sl2Decomposition dec = sl2_multiplicities(rr, h);
            GoodGradingPolytope poly = polytope(rr, dec);
            RestrictedWeyl rw = restricted_weyl(rs, nd.J, 100000);
            REQUIRE(rw.elements_enumerated);
            AdjacencyGraph g = adjacency_graph(rs, rr, dec, poly, rw.elements);
            CHECK(g.edges.empty());
            CHECK(g.dynkin_node >= 0);
        }
    }
}

TEST_CASE("polytope membership agrees with the Chevalley ad-rank oracle in A3") {
    RootSystem rs = build_root_system(Lie::A, 3);
    ChevalleyData cd = build_chevalley(rs);
    for (std::vector<int> J : {std::vector<int>{0, 1}, {0, 2}, {1}, {0, 1, 2}}) {
        NilpotentDatum nd;
        nd.J = J;
        nd.labels.assign(J.size(), 2);
        RestrictedRootSystem rr = restrict_roots(rs, J);
        Vec h = solve_h(rs, nd);
        Sl2Decomposition dec = sl2_multiplicities(rr, h);
        GoodGradingPolytope poly = polytope(rr, dec);
        for (const Vec& p : sample_points(poly, 42, 25)) {
            Vec c = h;
            c += rr.to_evec(p);
            GradingCheck chk = ad_rank_check(cd, J, c);
            CHECK(chk.good == polytope_contains(poly, p));
            if (chk.good) CHECK(chk.dim_centralizer == chk.dim_window);
        }
    }
}
