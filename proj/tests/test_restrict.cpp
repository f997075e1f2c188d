#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ggp/arrange.hpp"
#include "ggp/restrict.hpp"

using namespace ggp;

namespace {

// E7 with the A3+A2 Levi of Example eg1: paper labels 3,4,2,5,6,7/1 map to
// Bourbaki so that J = {1,3,5,6,7} (1-based), I = {2,4}
const std::vector<int> kE7J{0, 2, 4, 5, 6};

std::set<std::vector<int>> icoord_set(const RestrictedRootSystem& rr, bool positives_only) {
    std::set<std::vector<int>> out;
    if (positives_only) {
        for (int e : rr.positives) out.insert(rr.elems[e].icoords);
    } else {
        for (const auto& e : rr.elems) out.insert(e.icoords);
    }
    return out;
}

} // namespace

TEST_CASE("restriction extremes: J empty and J full") {
    RootSystem rs = build_root_system(Lie::A, 2);
    RestrictedRootSystem empty = restrict_roots(rs, {});
    CHECK(empty.elems.size() == rs.roots.size());
    RestrictedRootSystem full = restrict_roots(rs, {0, 1});
    CHECK(full.elems.empty());
    CHECK(full.m == 0);
}

TEST_CASE("E7 A3+A2: the seven positive restricted roots of the paper") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    CHECK(rr.m == 2);
    CHECK(rr.elems.size() == 14);
    std::set<std::vector<int>> expect{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}};
    CHECK(icoord_set(rr, true) == expect);
    REQUIRE(rr.theta >= 0);
    CHECK(rr.elems[rr.theta].icoords == std::vector<int>{2, 4});
}

TEST_CASE("E7 A3+A2: restricted Cartan matrix is [[2,-24/7],[-1,2]]") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    RBase base = standard_base(rr);
    REQUIRE(base.size() == 2);
    CHECK(rr.elems[base[0]].icoords == std::vector<int>{1, 0});
    CHECK(rr.elems[base[1]].icoords == std::vector<int>{0, 1});
    Mat c = restricted_cartan(rr, base);
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(1, 1) == 2);
    CHECK(c.at(0, 1) == rat(-24, 7));
    CHECK(c.at(1, 0) == -1);
    // orthogonality noted in the paper: alpha_1^J perp alpha_1^J + 2 alpha_2^J
    int perp = rr.elem_index({1, 2});
    CHECK(rr.inner_elems(base[0], perp) == 0);
}

TEST_CASE("restricted Cartan for J empty is the ordinary Cartan matrix") {
    RootSystem rs = build_root_system(Lie::G, 2);
    RestrictedRootSystem rr = restrict_roots(rs, {});
    RBase base = standard_base(rr);
    Mat c = restricted_cartan(rr, base);
    // base sorted descending-lex: alpha_1 then alpha_2
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(1, 1) == 2);
    CHECK(c.at(0, 1) == rs.cartan[1][0]);
    CHECK(c.at(1, 0) == rs.cartan[0][1]);
}

TEST_CASE("prop1 and prop2 closure properties, exhaustively per case") {
    for (auto [t, r, J] : {std::tuple<Lie, int, std::vector<int>>{Lie::E, 7, kE7J},
                           {Lie::F, 4, {0, 3}},
                           {Lie::B, 4, {1, 2}},
                           {Lie::G, 2, {0}},
                           {Lie::D, 4, {0}}}) {
        RootSystem rs = build_root_system(t, r);
        RestrictedRootSystem rr = restrict_roots(rs, J);
        int n = static_cast<int>(rr.elems.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                // prop1: distinct with positive inner product -> difference inside
                if (rr.inner_elems(a, b) > 0 && rr.elems[a].icoords != rr.elems[b].icoords)
                    CHECK(rr.diff(a, b) >= 0);
            }
        // prop2: proportional elements are integer multiples of a common one
        for (const Ray& ray : rr.rays) {
            int smallest = 0;
            for (int e : ray.members) {
                int s = std::abs(rr.elems[e].ray_scale);
                if (smallest == 0 || s < smallest) smallest = s;
            }
            for (int e : ray.members) CHECK(std::abs(rr.elems[e].ray_scale) % smallest == 0);
            bool found = false;
            for (int e : ray.members)
                if (std::abs(rr.elems[e].ray_scale) == smallest) found = true;
            CHECK(found);
        }
        // Lemma 2.1: every restricted root lifts with a J-dominant correction
        for (const auto& e : rr.elems) {
            bool lifts = false;
            for (int root : e.fiber) {
                Vec prime = rs.root_vec(root);
                prime -= e.evec; // alpha' = beta - alpha^J, lies in E_J
                bool dom = true;
                for (int j : rr.J)
                    if (rs.inner_simple(prime, j) < 0) { dom = false; break; }
                if (dom) { lifts = true; break; }
            }
            CHECK(lifts);
        }
    }
}

TEST_CASE("A2 with J empty has 6 chambers, against the sign-vector LP oracle") {
    RootSystem rs = build_root_system(Lie::A, 2);
    RestrictedRootSystem rr = restrict_roots(rs, {});
    auto ce = all_bases(rr, 1000);
    REQUIRE(ce.complete);
    CHECK(ce.chambers.size() == 6);
    // independent oracle: enumerate all sign vectors over the 3 hyperplanes
    // and test each for strict feasibility
    REQUIRE(rr.rays.size() == 3);
    int feasible_count = 0;
    for (int mask = 0; mask < 8; ++mask) {
        LinearSystem sys(2);
        for (int h = 0; h < 3; ++h) {
            Vec f(2);
            for (int k = 0; k < 2; ++k) {
                Rat s = 0;
                for (int l = 0; l < 2; ++l)
                    s += Rat(rr.rays[h].primitive[l]) * rr.gramJ.at(l, k);
                f[k] = s;
            }
            if (!((mask >> h) & 1)) f *= Rat(-1); // want f.x > 0 or < 0 per sign
            f *= Rat(-1);                          // f.x > 0  <=>  (-f).x < 0
            sys.add_strict(f, Rat(0));
        }
        if (feasible(sys)) ++feasible_count;
    }
    CHECK(feasible_count == 6);
}

TEST_CASE("E7 A3+A2 has 12 chambers and every base satisfies the base property") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    auto ce = all_bases(rr, 1000);
    REQUIRE(ce.complete);
    CHECK(ce.chambers.size() == 12); // Example eg1
    for (const Chamber& ch : ce.chambers) {
        REQUIRE(ch.base.size() == 2);
        Mat b(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) b.at(k, i) = rr.elems[ch.base[i]].icoords[k];
        Mat binv = inverse(b);
        for (const auto& e : rr.elems) {
            Vec v(2);
            for (int k = 0; k < 2; ++k) v[k] = e.icoords[k];
            Vec a = binv.mul(v);
            bool nonneg = true, nonpos = true;
            for (int i = 0; i < 2; ++i) {
                if (!is_integer(a[i])) { nonneg = nonpos = false; break; }
                if (a[i] > 0) nonpos = false;
                if (a[i] < 0) nonneg = false;
            }
            CHECK((nonneg || nonpos));
        }
        Vec w = chamber_witness(rr, ch.base);
        for (int i = 0; i < 2; ++i) CHECK(rr.eval(ch.base[i], w) > 0);
    }
}

TEST_CASE("base_from_regular: standard chamber, non-regular error, non-standard base") {
    RootSystem rs = build_root_system(Lie::E, 7);
    RestrictedRootSystem rr = restrict_roots(rs, kE7J);
    RBase base = standard_base(rr);
    Vec w = chamber_witness(rr, base);
    CHECK(base_from_regular(rr, {rr.to_evec(w)}) == base);
    Vec zero(rs.rank);
    CHECK_THROWS_AS(base_from_regular(rr, {zero}), NonRegular);
    // the paper's non-standard base {a1+3a2, -a2} appears among the chambers
    auto ce = all_bases(rr, 100);
    bool found = false;
    for (const Chamber& ch : ce.chambers) {
        std::set<std::vector<int>> bs;
        for (int e : ch.base) bs.insert(rr.elems[e].icoords);
        if (bs == std::set<std::vector<int>>{{1, 3}, {0, -1}}) found = true;
    }
    CHECK(found);
}

TEST_CASE("restricted Weyl groups by Schreier: orders and structure") {
    RootSystem g2 = build_root_system(Lie::G, 2);
    RestrictedWeyl wg = restricted_weyl(g2, {}, 1000);
    CHECK(wg.order == 12);
    CHECK(wg.elements_enumerated);
    CHECK(wg.elements.size() == 12);

    RootSystem f4 = build_root_system(Lie::F, 4);
    CHECK(restricted_weyl(f4, {}, 1000).order == 1152);

    // E6, J of type A3 (Bourbaki {3,4,5}): order 8 per the table
    RootSystem e6 = build_root_system(Lie::E, 6);
    RestrictedWeyl w8 = restricted_weyl(e6, {2, 3, 4}, 100000);
    CHECK(w8.order == 8);
    REQUIRE(w8.elements_enumerated);
    CHECK(w8.elements.size() == 8);
    // every element preserves the restricted root set
    RestrictedRootSystem rr = restrict_roots(e6, {2, 3, 4});
    auto all = icoord_set(rr, false);
    for (const Mat& g : w8.elements)
        for (const auto& e : rr.elems) {
            Vec v(rr.m);
            for (int k = 0; k < rr.m; ++k) v[k] = e.icoords[k];
            Vec img = g.mul(v);
            std::vector<int> ic(rr.m);
            for (int k = 0; k < rr.m; ++k) {
                REQUIRE(is_integer(img[k]));
                ic[k] = static_cast<int>(img[k].get_num().get_si());
            }
            CHECK(all.count(ic));
        }
}

TEST_CASE("budget exceeded surfaces as the documented error") {
    RootSystem e6 = build_root_system(Lie::E, 6);
    CHECK_THROWS_AS(restricted_weyl(e6, {2, 3, 4}, 10), BudgetExceeded);
}

TEST_CASE("levi classes: closure against brute force over W for rank <= 4") {
    for (auto [t, r] : {std::pair<Lie, int>{Lie::A, 3}, {Lie::B, 3}, {Lie::C, 4}, {Lie::D, 4},
                        {Lie::G, 2}, {Lie::F, 4}}) {
        RootSystem rs = build_root_system(t, r);
        std::vector<Mat> gens;
        for (int s = 0; s < r; ++s) {
            WeylWord w;
            w.gens.push_back(s);
            gens.push_back(weyl_matrix(rs, w));
        }
        std::vector<Mat> W = close_group(gens, 2000);
        REQUIRE(!W.empty());
        // for each w and subset K, record Delta_K -> Delta_J relations
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<int> J;
            for (int i = 0; i < r; ++i)
                if ((mask >> i) & 1) J.push_back(i);
            LeviClasses lc = levi_class(rs, J);
            std::set<std::vector<int>> brute;
            for (const Mat& w : W) {
                for (unsigned km = 0; km < (1u << r); ++km) {
                    if (__builtin_popcount(km) != __builtin_popcount(mask)) continue;
                    std::vector<int> K;
                    for (int i = 0; i < r; ++i)
                        if ((km >> i) & 1) K.push_back(i);
                    bool maps = true;
                    for (int k : K) {
                        Vec img = w.col(k);
                        bool simple_in_J = false;
                        for (int j : J) {
                            Vec e(r);
                            e[j] = 1;
                            if (img == e) simple_in_J = true;
                        }
                        if (!simple_in_J) { maps = false; break; }
                    }
                    if (maps) brute.insert(K);
                }
            }
            std::set<std::vector<int>> closure(lc.members.begin(), lc.members.end());
            CHECK(closure == brute);
            for (size_t i = 0; i < lc.members.size(); ++i) {
                for (int k : lc.members[i]) {
                    Vec img = lc.witness[i].col(k);
                    bool ok = false;
                    for (int j : J) {
                        Vec e(r);
                        e[j] = 1;
                        if (img == e) ok = true;
                    }
                    CHECK(ok);
                }
            }
        }
    }
}

TEST_CASE("Orlik-Solomon identity and regular W^J orbits on chambers") {
    for (auto [t, r] : {std::pair<Lie, int>{Lie::B, 3}, {Lie::F, 4}}) {
        RootSystem rs = build_root_system(t, r);
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<int> J;
            for (int i = 0; i < r; ++i)
                if ((mask >> i) & 1) J.push_back(i);
            RestrictedRootSystem rr = restrict_roots(rs, J);
            auto ce = all_bases(rr, 100000);
            REQUIRE(ce.complete);
            LeviClasses lc = levi_class(rs, J);
            RestrictedWeyl rw = restricted_weyl(rs, J, 100000);
            CHECK(Int(static_cast<long>(ce.chambers.size())) ==
                  Int(static_cast<long>(lc.members.size())) * rw.order);
            // W^J acts on chambers; the standard-base orbit is regular
            if (rw.elements_enumerated && !rr.elems.empty()) {
                std::set<std::set<std::vector<int>>> seen_bases;
                for (const Chamber& ch : ce.chambers) {
                    std::set<std::vector<int>> key;
                    for (int e : ch.base) key.insert(rr.elems[e].icoords);
                    seen_bases.insert(key);
                }
                RBase base = standard_base(rr);
                std::set<std::set<std::vector<int>>> orbit;
                for (const Mat& g : rw.elements) {
                    std::set<std::vector<int>> img;
                    for (int e : base) {
                        Vec v(rr.m);
                        for (int k = 0; k < rr.m; ++k) v[k] = rr.elems[e].icoords[k];
                        Vec w = g.mul(v);
                        std::vector<int> ic(rr.m);
                        for (int k = 0; k < rr.m; ++k)
                            ic[k] = static_cast<int>(w[k].get_num().get_si());
                        img.insert(ic);
                    }
                    CHECK(seen_bases.count(img));
                    orbit.insert(img);
                }
                CHECK(orbit.size() == rw.elements.size());
            }
        }
    }
}
