#include "ggp/chevalley.hpp"

#include <algorithm>

namespace ggp {

namespace {

inline long long pair_key(const RootSystem& rs, int a, int b) {
    return static_cast<long long>(a) * static_cast<long long>(rs.roots.size()) + b;
}

// largest p >= 0 with root(b) - p * root(a) still a root
int string_down(const RootSystem& rs, int a, int b) {
    std::vector<int> v = rs.roots[b];
    int p = 0;
    for (;;) {
        for (int i = 0; i < rs.rank; ++i) v[i] -= rs.roots[a][i];
        if (rs.root_index(v) < 0) break;
        ++p;
    }
    return p;
}

int sum_root(const RootSystem& rs, int a, int b) {
    std::vector<int> v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = rs.roots[a][i] + rs.roots[b][i];
    return rs.root_index(v);
}

// general constant reduced to the positive-positive table via the
// three-root identity N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
// for a + b + c = 0
Rat general_N(const RootSystem& rs, const std::unordered_map<long long, int>& table, int a, int b) {
    int z = sum_root(rs, a, b);
    if (z < 0) return Rat(0);
    bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb) {
        auto it = table.find(pair_key(rs, a, b));
        if (it != table.end()) return Rat(it->second);
        it = table.find(pair_key(rs, b, a));
        if (it != table.end()) return Rat(-it->second);
        throw Error("internal: missing structure constant");
    }
    if (!pa && !pb) return -general_N(rs, table, rs.negative_of(a), rs.negative_of(b));
    if (!pa) return -general_N(rs, table, b, a); // antisymmetry to (pos, neg)
    // a positive, b negative
    if (rs.is_positive(z))
        return rs.norm2(z) / rs.norm2(a) * general_N(rs, table, b, rs.negative_of(z));
    return rs.norm2(z) / rs.norm2(b) * general_N(rs, table, rs.negative_of(z), a);
}

} // namespace

int ChevalleyData::N(int a, int b) const {
    Rat v = general_N(*rs, table, a, b);
    if (!is_integer(v)) throw Error("internal: non-integral structure constant");
    return static_cast<int>(v.get_num().get_si());
}

Vec ChevalleyData::coroot(int root) const {
    Vec x(rs->rank);
    Rat n2 = rs->norm2(root);
    for (int i = 0; i < rs->rank; ++i)
        x[i] = Rat(rs->roots[root][i]) * rs->gram.at(i, i) / n2;
    return x;
}

ChevalleyData build_chevalley(const RootSystem& rs) {
    ChevalleyData cd;
    cd.rs = &rs;

    // positive roots are sorted by (height, lex); fill sums in that order
    // so each four-root reduction below only consults lower heights
    for (int g = 0; g < rs.num_pos; ++g) {
        if (rs.height(g) < 2) continue;
        // special pairs (a, b), a < b, a + b = g; minimal a is extraspecial
        std::vector<std::pair<int, int>> specials;
        for (int a = 0; a < rs.num_pos; ++a) {
            std::vector<int> v(rs.rank);
            for (int i = 0; i < rs.rank; ++i) v[i] = rs.roots[g][i] - rs.roots[a][i];
            int b = rs.root_index(v);
            if (b >= 0 && b < rs.num_pos && a < b) specials.emplace_back(a, b);
        }
        if (specials.empty()) throw Error("internal: positive root with no decomposition");
        auto [a1, b1] = specials.front();
        cd.table[pair_key(rs, a1, b1)] = string_down(rs, a1, b1) + 1;
        int na1 = rs.negative_of(a1), nb1 = rs.negative_of(b1);
        for (size_t s = 1; s < specials.size(); ++s) {
            auto [a, b] = specials[s];
            // four-root identity on (a, b, -a1, -b1)
            Rat t1 = 0, t2 = 0;
            int bma1 = sum_root(rs, b, na1);
            if (bma1 >= 0)
                t1 = general_N(rs, cd.table, b, na1) * general_N(rs, cd.table, a, nb1) /
                     rs.norm2(bma1);
            int ama1 = sum_root(rs, na1, a);
            if (ama1 >= 0)
                t2 = general_N(rs, cd.table, na1, a) * general_N(rs, cd.table, b, nb1) /
                     rs.norm2(ama1);
            Rat val = rs.norm2(g) * (t1 + t2) / Rat(cd.table[pair_key(rs, a1, b1)]);
            if (!is_integer(val)) throw Error("internal: non-integral structure constant");
            cd.table[pair_key(rs, a, b)] = static_cast<int>(val.get_num().get_si());
        }
    }
    return cd;
}

std::vector<std::pair<int, Rat>> bracket_basis(const ChevalleyData& cd, int a, int b) {
    const RootSystem& rs = *cd.rs;
    int nroots = static_cast<int>(rs.roots.size());
    std::vector<std::pair<int, Rat>> out;
    bool ra = a < nroots, rb = b < nroots;
    if (ra && rb) {
        if (b == rs.negative_of(a)) {
            // [e_a, e_{-a}] = h_a (coroot coordinates carry a's sign)
            Vec h = cd.coroot(a);
            for (int i = 0; i < rs.rank; ++i)
                if (h[i] != 0) out.emplace_back(nroots + i, h[i]);
            return out;
        }
        int z = sum_root(rs, a, b);
        if (z < 0) return out;
        Rat n = general_N(rs, cd.table, a, b);
        if (n != 0) out.emplace_back(z, n);
        return out;
    }
    if (!ra && !rb) return out; // Cartan is abelian
    if (!ra) {
        int i = a - nroots;
        Rat c = rs.pair_coroot(rs.root_vec(b), i);
        if (c != 0) out.emplace_back(b, c);
        return out;
    }
    int j = b - nroots;
    Rat c = rs.pair_coroot(rs.root_vec(a), j);
    if (c != 0) out.emplace_back(a, -c);
    return out;
}

GradingCheck ad_rank_check(const ChevalleyData& cd, const std::vector<int>& J, const Vec& c) {
    const RootSystem& rs = *cd.rs;
    int nroots = static_cast<int>(rs.roots.size());
    int dim = chev_dim(rs);

    std::vector<int> simple_roots;
    for (int j : J) {
        std::vector<int> v(rs.rank, 0);
        v[j] = 1;
        simple_roots.push_back(rs.root_index(v));
    }

    std::vector<Rat> deg(dim, Rat(0));
    for (int r = 0; r < nroots; ++r) deg[r] = rs.inner(rs.root_vec(r), c);

    GradingCheck out;
    std::map<Rat, std::vector<int>> by_deg;
    for (int i = 0; i < dim; ++i) by_deg[deg[i]].push_back(i);
    for (auto& [d, idxs] : by_deg) out.degree_dim[d] = static_cast<int>(idxs.size());
    for (auto& [d, idxs] : by_deg)
        if (d >= -1 && d < 1) out.dim_window += static_cast<int>(idxs.size());

    for (int sr : simple_roots)
        if (deg[sr] != 2) out.e_in_degree_2 = false;

    // sparse ad e, e = sum_{j in J} e_{alpha_j}
    std::vector<std::vector<std::pair<int, Rat>>> ad(dim);
    for (int b = 0; b < dim; ++b) {
        std::map<int, Rat> acc;
        for (int a : simple_roots)
            for (auto& [row, val] : bracket_basis(cd, a, b)) acc[row] += val;
        for (auto& [row, val] : acc)
            if (val != 0) ad[b].emplace_back(row, val);
    }

    {
        Mat m(dim, dim);
        for (int b = 0; b < dim; ++b)
            for (auto& [row, val] : ad[b]) m.at(row, b) = val;
        out.dim_centralizer = dim - rank(m);
    }

    if (!out.e_in_degree_2) {
        out.good = false; // e not homogeneous of degree 2: not a good grading
        return out;
    }

    auto rank_between = [&](const Rat& d) {
        auto it = by_deg.find(d);
        if (it == by_deg.end()) return 0;
        auto jt = by_deg.find(d + 2);
        const std::vector<int>* rows = jt == by_deg.end() ? nullptr : &jt->second;
        std::map<int, int> rowpos;
        if (rows)
            for (size_t i = 0; i < rows->size(); ++i) rowpos[(*rows)[i]] = static_cast<int>(i);
        Mat m(rows ? static_cast<int>(rows->size()) : 0, static_cast<int>(it->second.size()));
        for (size_t cidx = 0; cidx < it->second.size(); ++cidx)
            for (auto& [row, val] : ad[it->second[cidx]]) {
                auto rp = rowpos.find(row);
                if (rp == rowpos.end()) throw Error("internal: ad e not of degree 2");
                m.at(rp->second, static_cast<int>(cidx)) = val;
            }
        return rank(m);
    };

    bool good = true;
    for (auto& [d, idxs] : by_deg) {
        if (d <= -1 && rank_between(d) != static_cast<int>(idxs.size())) { good = false; break; }
        if (d >= 1 && rank_between(d - 2) != static_cast<int>(idxs.size())) { good = false; break; }
    }
    out.good = good;
    return out;
}

} // namespace ggp
