#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggp/arrange.hpp"
#include "ggp/tables.hpp"

using namespace ggp;

TEST_CASE("single hyperplane has two chambers; Boolean arrangement has exponents all 1") {
    Arrangement one;
    one.dim = 3;
    Vec f(3);
    f[0] = 1;
    one.normals.push_back(f);
    Int z = eval_poly(char_poly(one), -1);
    CHECK((z < 0 ? Int(-z) : z) == 2);

    Arrangement boolean;
    boolean.dim = 4;
    for (int i = 0; i < 4; ++i) {
        Vec e(4);
        e[i] = 1;
        boolean.normals.push_back(e);
    }
    CHECK(exponents(char_poly(boolean)) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("G2 J empty: 12 chambers, exponents 1,5, h = 6") {
    RootSystem rs = build_root_system(Lie::G, 2);
    RestrictedRootSystem rr = restrict_roots(rs, {});
    CHECK(chamber_count(rr, 100) == 12);
    auto cp = char_poly(arrangement_of(rr));
    CHECK(exponents(cp) == std::vector<int>{1, 5});
    LeviClasses kj = levi_class(rs, {});
    CoxeterH ch = coxeter_h(rs, kj);
    CHECK(ch.h == 6);
    // Sommers: p in {1,5} prime to theta coefficients (3,2); both are exponents
    auto rep = sommers_check(rs, ch.h, exponents(cp));
    CHECK(rep.candidates == std::vector<int>{1, 5});
    CHECK(rep.all_exponents);
}

TEST_CASE("h^J = 1 for the full subset (empty restricted system)") {
    RootSystem rs = build_root_system(Lie::G, 2);
    LeviClasses kj = levi_class(rs, {0, 1});
    CHECK(coxeter_h(rs, kj).h == 1);
    CHECK(sommers_check(rs, 1, {}).candidates.empty());
}

TEST_CASE("Zaslavsky consistency and exponent identities on every F4 subset") {
    RootSystem rs = build_root_system(Lie::F, 4);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<int> J;
        for (int i = 0; i < 4; ++i)
            if ((mask >> i) & 1) J.push_back(i);
        RestrictedRootSystem rr = restrict_roots(rs, J);
        auto ce = all_bases(rr, 10000);
        REQUIRE(ce.complete);
        Int z = eval_poly(char_poly(arrangement_of(rr)), -1);
        if (z < 0) z = -z;
        CHECK(Int(static_cast<long>(ce.chambers.size())) == z);
        auto exps = exponents(char_poly(arrangement_of(rr)));
        long sum = 0, prod = 1;
        for (int b : exps) {
            sum += b;
            prod *= 1 + b;
        }
        CHECK(sum == static_cast<long>(rr.rays.size()));
        CHECK(prod == static_cast<long>(ce.chambers.size()));
        // irreducibility lower bounds (g simple, m >= 1 cases)
        if (!exps.empty()) CHECK(exps[0] == 1);
        if (exps.size() >= 2) CHECK(exps[1] >= 2);
    }
}

TEST_CASE("table report: all 4 G2 rows pass") {
    TablesReport rep = tables_report(Lie::G, 2, 1000000, 1000000);
    CHECK(rep.pass == 4);
    CHECK(rep.fail == 0);
    CHECK(rep.skipped == 0);
}

TEST_CASE("table report: all 12 F4 rows pass") {
    TablesReport rep = tables_report(Lie::F, 4, 1000000, 1000000);
    for (const auto& r : rep.rows) {
        INFO(r.name << " " << r.mismatch << r.skip_reason);
        CHECK(r.pass);
    }
    CHECK(rep.pass == 12);
}

TEST_CASE("levi class names: tildes in F4, primes in E7") {
    RootSystem f4 = build_root_system(Lie::F, 4);
    CHECK(levi_type_name(f4, {0, 1}) == "A2");
    CHECK(levi_type_name(f4, {2, 3}) == "~A2");
    CHECK(levi_type_name(f4, {1, 2}) == "B2");
    CHECK(levi_type_name(f4, {1, 2, 3}) == "C3");
    CHECK(levi_type_name(f4, {0, 1, 2}) == "B3");
    CHECK(levi_type_name(f4, {0, 3}) == "A1+~A1");
    RootSystem e6 = build_root_system(Lie::E, 6);
    CHECK(levi_type_name(e6, {}) == "1");
    CHECK(levi_type_name(e6, {1, 2, 3, 4}) == "D4");
    CHECK(levi_type_name(e6, {0, 1, 2, 3, 4, 5}) == "E6");
    CHECK(levi_type_name(e6, {0, 2, 3, 4, 5}) == "A5");
    CHECK(levi_type_name(e6, {0, 1, 2, 3, 4}) == "D5");
}
