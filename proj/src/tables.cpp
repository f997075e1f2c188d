#include "ggp/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ggp {

namespace {

TableRow row(std::string name, int a, long long c, long long w, int k, int h, std::vector<int> e) {
    return TableRow{std::move(name), a, c, w, k, h, std::move(e)};
}

} // namespace

std::vector<TableRow> fixture_rows(Lie type, int rank) {
    if (type == Lie::G && rank == 2)
        return {
            row("1", 6, 12, 12, 1, 6, {1, 5}),
            row("A1", 1, 2, 2, 1, 4, {1}),
            row("~A1", 1, 2, 2, 1, 3, {1}),
            row("G2", 0, 1, 1, 1, 1, {}),
        };
    if (type == Lie::F && rank == 4)
        return {
            row("1", 24, 1152, 1152, 1, 12, {1, 5, 7, 11}),
            row("A1", 13, 96, 48, 2, 9, {1, 5, 7}),
            row("~A1", 13, 96, 48, 2, 8, {1, 5, 7}),
            row("A2", 6, 12, 12, 1, 7, {1, 5}),
            row("~A2", 6, 12, 12, 1, 6, {1, 5}),
            row("A1+~A1", 6, 12, 4, 3, 6, {1, 5}),
            row("B2", 4, 8, 8, 1, 5, {1, 3}),
            row("A2+~A1", 1, 2, 2, 1, 5, {1}),
            row("~A2+A1", 1, 2, 2, 1, 4, {1}),
            row("C3", 1, 2, 2, 1, 3, {1}),
            row("B3", 1, 2, 2, 1, 3, {1}),
            row("F4", 0, 1, 1, 1, 1, {}),
        };
    if (type == Lie::E && rank == 6)
        return {
            row("1", 36, 51840, 51840, 1, 12, {1, 4, 5, 7, 8, 11}),
            row("A1", 25, 4320, 720, 6, 9, {1, 4, 5, 7, 8}),
            row("2A1", 17, 480, 48, 10, 8, {1, 4, 5, 7}),
            row("A2", 15, 360, 72, 5, 7, {1, 4, 5, 5}),
            row("A2+A1", 10, 60, 6, 10, 6, {1, 4, 5}),
            row("3A1", 10, 60, 12, 5, 6, {1, 4, 5}),
            row("A3", 8, 40, 8, 5, 5, {1, 3, 4}),
            row("2A2", 6, 12, 12, 1, 6, {1, 5}),
            row("A2+2A1", 5, 10, 2, 5, 5, {1, 4}),
            row("A3+A1", 4, 8, 2, 4, 4, {1, 3}),
            row("A4", 4, 8, 2, 4, 4, {1, 3}),
            row("D4", 3, 6, 6, 1, 3, {1, 2}),
            row("2A2+A1", 1, 2, 2, 1, 4, {1}),
            row("A4+A1", 1, 2, 1, 2, 3, {1}),
            row("A5", 1, 2, 2, 1, 3, {1}),
            row("D5", 1, 2, 1, 2, 2, {1}),
            row("E6", 0, 1, 1, 1, 1, {}),
        };
    if (type == Lie::E && rank == 7)
        return {
            row("1", 63, 2903040, 2903040, 1, 18, {1, 5, 7, 9, 11, 13, 17}),
            row("A1", 46, 161280, 23040, 7, 14, {1, 5, 7, 9, 11, 13}),
            row("2A1", 33, 11520, 768, 15, 12, {1, 5, 7, 9, 11}),
            row("A2", 30, 8640, 1440, 6, 11, {1, 5, 7, 8, 9}),
            row("(3A1)''", 24, 1152, 1152, 1, 12, {1, 5, 7, 11}),
            row("(3A1)'", 22, 960, 96, 10, 10, {1, 5, 7, 9}),
            row("A2+A1", 21, 864, 48, 18, 9, {1, 5, 7, 8}),
            row("A3", 18, 576, 96, 6, 8, {1, 5, 5, 7}),
            row("4A1", 13, 96, 48, 2, 9, {1, 5, 7}),
            row("A2+2A1", 13, 96, 8, 12, 8, {1, 5, 7}),
            row("2A2", 13, 96, 24, 4, 8, {1, 5, 7}),
            row("(A3+A1)''", 13, 96, 48, 2, 8, {1, 5, 7}),
            row("(A3+A1)'", 11, 72, 8, 9, 7, {1, 5, 5}),
            row("A4", 10, 60, 12, 5, 6, {1, 4, 5}),
            row("D4", 9, 48, 48, 1, 6, {1, 3, 5}),
            row("A2+3A1", 6, 12, 12, 1, 7, {1, 5}),
            row("2A2+A1", 6, 12, 4, 3, 6, {1, 5}),
            row("A3+2A1", 6, 12, 4, 3, 6, {1, 5}),
            row("A3+A2", 6, 12, 4, 3, 6, {1, 5}),
            row("(A5)''", 6, 12, 12, 1, 6, {1, 5}),
            row("A4+A1", 5, 10, 2, 5, 5, {1, 4}),
            row("D4+A1", 4, 8, 8, 1, 5, {1, 3}),
            row("(A5)'", 4, 8, 4, 2, 4, {1, 3}),
            row("D5", 4, 8, 4, 2, 4, {1, 3}),
            row("A3+A2+A1", 1, 2, 2, 1, 5, {1}),
            row("A4+A2", 1, 2, 2, 1, 4, {1}),
            row("A5+A1", 1, 2, 2, 1, 4, {1}),
            row("D5+A1", 1, 2, 2, 1, 3, {1}),
            row("A6", 1, 2, 2, 1, 3, {1}),
            row("D6", 1, 2, 2, 1, 3, {1}),
            row("E6", 1, 2, 2, 1, 2, {1}),
            row("E7", 0, 1, 1, 1, 1, {}),
        };
    if (type == Lie::E && rank == 8)
        return {
            row("1", 120, 696729600, 696729600, 1, 30, {1, 7, 11, 13, 17, 19, 23, 29}),
            row("A1", 91, 23224320, 2903040, 8, 24, {1, 7, 11, 13, 17, 19, 23}),
            row("2A1", 68, 967680, 46080, 21, 20, {1, 7, 11, 13, 17, 19}),
            row("A2", 63, 725760, 103680, 7, 19, {1, 7, 11, 13, 14, 17}),
            row("3A1", 49, 48384, 2304, 21, 18, {1, 7, 11, 13, 17}),
            row("A2+A1", 46, 40320, 1440, 28, 16, {1, 7, 11, 13, 14}),
            row("A3", 41, 26880, 3840, 7, 15, {1, 7, 9, 11, 13}),
            row("4A1", 32, 2688, 384, 7, 15, {1, 7, 11, 13}),
            row("A2+2A1", 32, 2688, 96, 28, 14, {1, 7, 11, 13}),
            row("2A2", 30, 2304, 288, 8, 13, {1, 7, 11, 11}),
            row("A3+A1", 28, 1920, 96, 20, 12, {1, 7, 9, 11}),
            row("A4", 25, 1440, 240, 6, 11, {1, 7, 8, 9}),
            row("D4", 24, 1152, 1152, 1, 12, {1, 5, 7, 11}),
            row("A2+3A1", 19, 192, 24, 8, 12, {1, 7, 11}),
            row("2A2+A1", 19, 192, 24, 8, 12, {1, 7, 11}),
            row("A3+2A1", 17, 160, 16, 10, 11, {1, 7, 9}),
            row("A3+A2", 17, 160, 16, 10, 10, {1, 7, 9}),
            row("A4+A1", 16, 144, 12, 12, 9, {1, 7, 8}),
            row("D4+A1", 13, 96, 48, 2, 9, {1, 5, 7}),
            row("A5", 13, 96, 24, 4, 8, {1, 5, 7}),
            row("D5", 13, 96, 48, 2, 8, {1, 5, 7}),
            row("2A2+2A1", 8, 16, 8, 2, 10, {1, 7}),
            row("A3+A2+A1", 8, 16, 4, 4, 9, {1, 7}),
            row("A4+2A1", 8, 16, 4, 4, 8, {1, 7}),
            row("2A3", 8, 16, 8, 2, 8, {1, 7}),
            // the printed A4+A2 row (4,8,4,16) contradicts the identities
            // sum b_i = |A^J| and prod (1+b_i) = |C^J|; corrected values
            // below are recomputed and identity-checked
            row("A4+A2", 8, 16, 4, 4, 8, {1, 7}),
            row("A5+A1", 6, 12, 4, 3, 7, {1, 5}),
            row("D4+A2", 6, 12, 12, 1, 7, {1, 5}),
            row("A6", 6, 12, 4, 3, 6, {1, 5}),
            row("D5+A1", 6, 12, 4, 3, 6, {1, 5}),
            row("E6", 6, 12, 12, 1, 6, {1, 5}),
            row("D6", 4, 8, 8, 1, 5, {1, 3}),
            row("A4+A2+A1", 1, 2, 2, 1, 7, {1}),
            row("A4+A3", 1, 2, 2, 1, 6, {1}),
            row("A6+A1", 1, 2, 2, 1, 5, {1}),
            row("D5+A2", 1, 2, 2, 1, 5, {1}),
            row("E6+A1", 1, 2, 2, 1, 4, {1}),
            row("A7", 1, 2, 2, 1, 4, {1}),
            row("D7", 1, 2, 2, 1, 3, {1}),
            row("E7", 1, 2, 2, 1, 3, {1}),
            row("E8", 0, 1, 1, 1, 1, {}),
        };
    throw InvalidInput("no bundled table for this type");
}

namespace {

struct Component {
    char letter;
    int rank;
    bool tilde;
};

bool comp_less(const Component& a, const Component& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.tilde != b.tilde) return !a.tilde;
    return a.letter < b.letter;
}

bool comp_eq(const Component& a, const Component& b) {
    return a.letter == b.letter && a.rank == b.rank && a.tilde == b.tilde;
}

Component classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
    int n = static_cast<int>(nodes.size());
    Component c{'A', n, false};
    if (rs.type == Lie::F || rs.type == Lie::G) {
        Rat shortest = rs.gram.at(nodes[0], nodes[0]);
        for (int i = 0; i < rs.rank; ++i)
            if (rs.gram.at(i, i) < shortest) shortest = rs.gram.at(i, i);
        bool all_short = true;
        for (int v : nodes)
            if (rs.gram.at(v, v) != shortest) all_short = false;
        c.tilde = all_short;
    }
    if (n == 1) return c;

    int bond = 1; // max |<a,b^vee><b,a^vee>| over edges
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int p = rs.cartan[nodes[i]][nodes[j]] * rs.cartan[nodes[j]][nodes[i]];
            if (p != 0) {
                ++deg[i];
                bond = std::max(bond, p);
            }
        }
    if (bond == 3) {
        c.letter = 'G';
        c.tilde = false;
        return c;
    }
    if (bond == 2) {
        c.tilde = false;
        if (n == 2) {
            c.letter = 'B'; // B2 = C2, tables use B2
            return c;
        }
        int longs = 0;
        Rat longest = rs.gram.at(nodes[0], nodes[0]);
        for (int v : nodes) longest = std::max(longest, Rat(rs.gram.at(v, v)));
        for (int v : nodes)
            if (rs.gram.at(v, v) == longest) ++longs;
        if (longs == 1) {
            c.letter = 'C';
        } else if (longs == n - 1) {
            c.letter = 'B';
        } else {
            c.letter = 'F';
        }
        return c;
    }
    // simply laced
    int branch = -1;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 3) branch = i;
    if (branch < 0) return c; // path: A_n
    // arm lengths from the branch node
    std::vector<int> arms;
    for (int i = 0; i < n; ++i) {
        if (i == branch || deg[i] != 1) continue;
        // walk from leaf i to branch
        int len = 0, prev = -1, cur = i;
        while (cur != branch) {
            ++len;
            for (int j = 0; j < n; ++j) {
                if (j == cur || j == prev) continue;
                if (rs.cartan[nodes[cur]][nodes[j]] != 0) {
                    prev = cur;
                    cur = j;
                    break;
                }
            }
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1)
        c.letter = 'D';
    else
        c.letter = 'E';
    return c;
}

} // namespace

std::string levi_type_name(const RootSystem& rs, const std::vector<int>& K) {
    if (K.empty()) return "1";
    // connected components of the sub-diagram
    std::vector<int> nodes = K;
    std::sort(nodes.begin(), nodes.end());
    std::vector<char> used(nodes.size(), 0);
    std::vector<Component> comps;
    for (size_t s = 0; s < nodes.size(); ++s) {
        if (used[s]) continue;
        std::vector<int> comp{static_cast<int>(s)};
        used[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (size_t t = 0; t < nodes.size(); ++t) {
                if (used[t]) continue;
                if (rs.cartan[nodes[comp[head]]][nodes[t]] != 0) {
                    used[t] = 1;
                    comp.push_back(static_cast<int>(t));
                }
            }
        std::vector<int> cn;
        for (int idx : comp) cn.push_back(nodes[idx]);
        comps.push_back(classify_component(rs, cn));
    }
    std::sort(comps.begin(), comps.end(), comp_less);
    std::string name;
    for (size_t i = 0; i < comps.size();) {
        size_t j = i;
        while (j < comps.size() && comp_eq(comps[i], comps[j])) ++j;
        if (!name.empty()) name += "+";
        if (j - i > 1) name += std::to_string(j - i);
        if (comps[i].tilde) name += "~";
        name += comps[i].letter;
        name += std::to_string(comps[i].rank);
        i = j;
    }
    return name;
}

std::vector<LeviClassInfo> enumerate_levi_classes(const RootSystem& rs) {
    std::vector<LeviClassInfo> out;
    std::set<unsigned> seen;
    for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
        if (seen.count(mask)) continue;
        std::vector<int> K;
        for (int i = 0; i < rs.rank; ++i)
            if ((mask >> i) & 1) K.push_back(i);
        LeviClasses lc = levi_class(rs, K);
        for (const auto& member : lc.members) {
            unsigned m = 0;
            for (int x : member) m |= 1u << x;
            seen.insert(m);
        }
        LeviClassInfo info;
        info.rep = K;
        info.class_size = static_cast<int>(lc.members.size());
        info.name = levi_type_name(rs, K);
        out.push_back(std::move(info));
    }
    // assign primes to name collisions (E7): '' to the larger |A^J|
    std::map<std::string, std::vector<size_t>> by_name;
    for (size_t i = 0; i < out.size(); ++i) by_name[out[i].name].push_back(i);
    for (auto& [name, idxs] : by_name) {
        if (idxs.size() == 1) continue;
        if (idxs.size() > 2)
            throw Error("more than two conjugacy classes share the name " + name);
        auto rays_of = [&](size_t i) {
            return static_cast<int>(restrict_roots(rs, out[i].rep).rays.size());
        };
        int r0 = rays_of(idxs[0]), r1 = rays_of(idxs[1]);
        size_t big = r0 >= r1 ? idxs[0] : idxs[1];
        size_t small = r0 >= r1 ? idxs[1] : idxs[0];
        out[big].name = "(" + name + ")''";
        out[small].name = "(" + name + ")'";
    }
    return out;
}

TablesReport tables_report(Lie type, int rank, long long chamber_budget, long long orbit_budget) {
    RootSystem rs = build_root_system(type, rank);
    auto fixtures = fixture_rows(type, rank);
    auto classes = enumerate_levi_classes(rs);
    std::map<std::string, const LeviClassInfo*> by_name;
    for (const auto& c : classes) by_name[c.name] = &c;
    if (classes.size() != fixtures.size())
        throw TheoremViolation("conjugacy class count disagrees with the bundled table");

    TablesReport rep;
    for (const auto& fx : fixtures) {
        ComputedRow r;
        r.name = fx.name;
        auto it = by_name.find(fx.name);
        if (it == by_name.end()) {
            r.pass = false;
            r.mismatch = "no conjugacy class with this name";
            rep.rows.push_back(r);
            ++rep.fail;
            continue;
        }
        r.J = it->second->rep;
        if (fx.chambers > chamber_budget) {
            r.skip_reason = "chamber count beyond desk scale";
            rep.rows.push_back(r);
            ++rep.skipped;
            continue;
        }
        RestrictedRootSystem rr = restrict_roots(rs, r.J);
        r.hyperplanes = static_cast<int>(rr.rays.size());
        auto ce = all_bases(rr, chamber_budget + 1);
        if (!ce.complete) {
            r.skip_reason = "chamber enumeration exceeded budget";
            rep.rows.push_back(r);
            ++rep.skipped;
            continue;
        }
        r.chambers = static_cast<long long>(ce.chambers.size());
        LeviClasses kj = levi_class(rs, r.J);
        r.classes = static_cast<int>(kj.members.size());
        if (r.chambers % r.classes != 0)
            throw TheoremViolation("|C^J| not divisible by |K_J|");
        long long predicted_weyl = r.chambers / r.classes;
        Int orbit = rs.weyl_order() / Int(static_cast<long>(predicted_weyl));
        if (orbit <= Int(static_cast<long>(orbit_budget))) {
            RestrictedWeyl rw = restricted_weyl(rs, r.J, orbit_budget, /*elem_budget=*/2048);
            r.weyl_order = rw.order.get_si();
            r.weyl_path = "schreier";
            if (r.weyl_order != predicted_weyl)
                throw TheoremViolation("Schreier order disagrees with |C^J| / |K_J|");
        } else {
            r.weyl_order = predicted_weyl;
            r.weyl_path = "orlik-solomon";
        }
        CoxeterH ch = coxeter_h(rs, kj);
        r.h = ch.h;
        auto cp = char_poly(arrangement_of(rr));
        r.exps = exponents(cp);
        // identities
        long long sum = 0, prod = 1;
        for (int b : r.exps) {
            sum += b;
            prod *= 1 + b;
        }
        if (sum != r.hyperplanes || prod != r.chambers)
            throw TheoremViolation("exponent identities fail for " + fx.name);
        sommers_check(rs, r.h, r.exps);
        r.computed = true;

        std::ostringstream bad;
        if (r.hyperplanes != fx.hyperplanes) bad << " |A^J|=" << r.hyperplanes;
        if (r.chambers != fx.chambers) bad << " |C^J|=" << r.chambers;
        if (r.weyl_order != fx.weyl_order) bad << " |W^J|=" << r.weyl_order;
        if (r.classes != fx.classes) bad << " |K_J|=" << r.classes;
        if (r.h != fx.h) bad << " h^J=" << r.h;
        if (r.exps != fx.exps) bad << " exponents differ";
        r.mismatch = bad.str();
        r.pass = r.mismatch.empty();
        rep.rows.push_back(r);
        if (r.pass)
            ++rep.pass;
        else
            ++rep.fail;
    }
    return rep;
}

namespace {

// characteristics transcribed from the adjacency tables; the display
// order (top row then the branch node) is converted to Bourbaki order
// E6: top = 1,3,4,5,6, below = 2; E7: top = 1,3,4,5,6,7, below = 2.
std::vector<int> e6chr(int a, int b, int c, int d, int e, int below) {
    return {a, below, b, c, d, e};
}

std::vector<int> e7chr(int a, int b, int c, int d, int e, int f, int below) {
    return {a, below, b, c, d, e, f};
}

} // namespace

std::vector<AdjacencyFixture> adjacency_fixtures() {
    std::vector<AdjacencyFixture> out;
    {
        AdjacencyFixture fx{Lie::E, 6, "D4(a1)", "D4", 1, {}, {}, 5};
        fx.nodes = {e6chr(0, 2, 0, 0, 2, 0), e6chr(1, 1, 0, 1, 1, 0), e6chr(2, 0, 0, 2, 0, 0),
                    e6chr(0, 1, 1, 0, 1, 0), e6chr(1, 0, 1, 1, 0, 0), e6chr(0, 0, 2, 0, 0, 0)};
        fx.edges = {{0, 1}, {1, 2}, {3, 4}, {0, 3}, {3, 5}, {2, 4}, {4, 5}, {1, 4}, {1, 3}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 6, "A3+A1", "A3+A1", 0, {}, {}, 2};
        fx.nodes = {e6chr(1, 0, 1, 0, 2, 0), e6chr(1, 0, 0, 1, 1, 1), e6chr(0, 1, 0, 1, 0, 1),
                    e6chr(1, 1, 0, 0, 1, 1), e6chr(2, 0, 1, 0, 1, 0)};
        fx.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 6, "D5", "D5", 0, {}, {}, 4};
        fx.nodes = {e6chr(2, 0, 2, 2, 2, 2), e6chr(1, 1, 1, 2, 2, 1), e6chr(0, 2, 0, 2, 2, 2),
                    e6chr(1, 1, 1, 1, 2, 2), e6chr(2, 0, 2, 0, 2, 2), e6chr(2, 1, 1, 1, 1, 2),
                    e6chr(2, 2, 0, 2, 0, 2), e6chr(2, 2, 1, 1, 1, 1), e6chr(2, 2, 2, 0, 2, 2)};
        fx.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 6, "A3", "A3", 0, {}, {}, 3};
        fx.nodes = {e6chr(0, 0, 0, 2, 2, 0), e6chr(0, 0, 0, 1, 2, 1), e6chr(0, 0, 0, 0, 2, 2),
                    e6chr(1, 0, 0, 0, 1, 2), e6chr(2, 0, 0, 0, 0, 2), e6chr(2, 1, 0, 0, 0, 1),
                    e6chr(2, 2, 0, 0, 0, 0)};
        fx.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 6, "D5(a1)", "D5", 1, {}, {}, 1};
        fx.nodes = {e6chr(0, 2, 0, 0, 2, 2), e6chr(1, 1, 0, 1, 1, 2), e6chr(2, 0, 0, 2, 0, 2)};
        fx.edges = {{0, 1}, {1, 2}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 6, "A2+2A1", "A2+2A1", 0, {}, {}, 1};
        fx.nodes = {e6chr(0, 0, 0, 2, 0, 0), e6chr(0, 1, 0, 1, 0, 0), e6chr(0, 2, 0, 0, 0, 0)};
        fx.edges = {{0, 1}, {1, 2}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 6, "2A1", "2A1", 0, {}, {}, 1};
        fx.nodes = {e6chr(0, 0, 0, 0, 2, 0), e6chr(1, 0, 0, 0, 1, 0), e6chr(2, 0, 0, 0, 0, 0)};
        fx.edges = {{0, 1}, {1, 2}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 7, "E6(a1)", "E6", 1, {}, {}, 4};
        fx.nodes = {e7chr(0, 2, 0, 0, 2, 2, 2), e7chr(1, 1, 0, 1, 1, 2, 2),
                    e7chr(2, 0, 0, 2, 0, 2, 2), e7chr(2, 0, 1, 1, 1, 1, 0),
                    e7chr(2, 0, 2, 0, 2, 0, 0)};
        fx.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
        out.push_back(fx);
    }
    {
        AdjacencyFixture fx{Lie::E, 7, "A4+A1", "A4+A1", 0, {}, {}, 0};
        fx.nodes = {e7chr(1, 0, 1, 0, 1, 0, 0), e7chr(1, 0, 0, 1, 0, 1, 1),
                    e7chr(0, 0, 0, 2, 0, 2, 0), e7chr(0, 1, 0, 1, 0, 2, 0),
                    e7chr(0, 2, 0, 0, 0, 2, 0)};
        fx.edges = {{0, 1}, {2, 3}, {3, 4}};
        out.push_back(fx);
    }
    return out;
}

NilpotentDatum resolve_fixture_datum(const RootSystem& rs, const AdjacencyFixture& fx) {
    auto classes = enumerate_levi_classes(rs);
    const LeviClassInfo* cls = nullptr;
    for (const auto& c : classes)
        if (c.name == fx.levi) cls = &c;
    if (!cls) throw InvalidInput("no Levi class named " + fx.levi);
    auto data = distinguished_labels(rs, cls->rep);
    if (data.empty()) throw Error("internal: no distinguished labels on " + fx.levi);
    std::stable_sort(data.begin(), data.end(), [&](const NilpotentDatum& a, const NilpotentDatum& b) {
        return levi_orbit_dim(rs, a) > levi_orbit_dim(rs, b);
    });
    if (fx.decoration >= static_cast<int>(data.size()))
        throw InvalidInput("decoration index out of range for " + fx.levi);
    return data[fx.decoration];
}

GraphCheck check_adjacency_fixture(const RootSystem& rs, const AdjacencyFixture& fx) {
    GraphCheck out;
    NilpotentDatum nd = resolve_fixture_datum(rs, fx);
    RestrictedRootSystem rr = restrict_roots(rs, nd.J);
    Vec h = solve_h(rs, nd);
    Sl2Decomposition dec = sl2_multiplicities(rr, h);
    GoodGradingPolytope poly = polytope(rr, dec);
    RestrictedWeyl rw = restricted_weyl(rs, nd.J, 100000000LL);
    if (!rw.elements_enumerated) {
        out.mismatch = "W_e too large to enumerate";
        return out;
    }
    AdjacencyGraph g = adjacency_graph(rs, rr, dec, poly, rw.elements);

    if (g.labels.size() != fx.nodes.size()) {
        out.mismatch = "node count " + std::to_string(g.labels.size()) + " != " +
                       std::to_string(fx.nodes.size());
        return out;
    }
    // match nodes by characteristic
    std::vector<int> to_fx(g.labels.size(), -1);
    for (size_t i = 0; i < g.labels.size(); ++i) {
        for (size_t j = 0; j < fx.nodes.size(); ++j) {
            bool eq = true;
            for (int k = 0; k < rs.rank; ++k)
                if (g.labels[i].labels[k] != fx.nodes[j][k]) { eq = false; break; }
            if (eq) { to_fx[i] = static_cast<int>(j); break; }
        }
        if (to_fx[i] < 0) {
            out.mismatch = "characteristic " + to_display(g.labels[i]) + " not in the table";
            return out;
        }
    }
    std::set<int> hit(to_fx.begin(), to_fx.end());
    if (hit.size() != fx.nodes.size()) {
        out.mismatch = "characteristics are not distinct";
        return out;
    }
    std::set<std::pair<int, int>> want;
    for (auto [a, b] : fx.edges) want.insert({std::min(a, b), std::max(a, b)});
    std::set<std::pair<int, int>> got;
    for (auto [a, b] : g.edges) {
        int fa = to_fx[a], fb = to_fx[b];
        got.insert({std::min(fa, fb), std::max(fa, fb)});
    }
    if (want != got) {
        out.mismatch = "edge sets differ";
        return out;
    }
    if (fx.bold >= 0 && (g.dynkin_node < 0 || to_fx[g.dynkin_node] != fx.bold)) {
        out.mismatch = "Dynkin node is not the bold one";
        return out;
    }
    out.pass = true;
    return out;
}

} // namespace ggp
