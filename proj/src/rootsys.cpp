#include "ggp/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ggp {

Lie lie_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Lie::A;
        case 'B': case 'b': return Lie::B;
        case 'C': case 'c': return Lie::C;
        case 'D': case 'd': return Lie::D;
        case 'E': case 'e': return Lie::E;
        case 'F': case 'f': return Lie::F;
        case 'G': case 'g': return Lie::G;
    }
    throw InvalidInput(std::string("unknown type letter '") + c + "'");
}

char lie_to_char(Lie t) {
    switch (t) {
        case Lie::A: return 'A';
        case Lie::B: return 'B';
        case Lie::C: return 'C';
        case Lie::D: return 'D';
        case Lie::E: return 'E';
        case Lie::F: return 'F';
        case Lie::G: return 'G';
    }
    return '?';
}

namespace {

std::string coord_key(const std::vector<int>& c) {
    std::string k;
    k.reserve(c.size() * 3);
    for (int x : c) {
        k += std::to_string(x);
        k += ',';
    }
    return k;
}

void validate(Lie t, int rank) {
    bool ok = false;
    switch (t) {
        case Lie::A: ok = rank >= 1; break;
        case Lie::B: ok = rank >= 2; break;
        case Lie::C: ok = rank >= 2; break;
        case Lie::D: ok = rank >= 3; break;
        case Lie::E: ok = rank >= 6 && rank <= 8; break;
        case Lie::F: ok = rank == 4; break;
        case Lie::G: ok = rank == 2; break;
    }
    if (!ok)
        throw InvalidInput(std::string("invalid rank ") + std::to_string(rank) + " for type " +
                           lie_to_char(t));
}

// Bourbaki numbering. Edges hold the Cartan integers of both directions.
// symmetrizer d_i: (alpha_i, alpha_i) = 2 d_i with the smallest integer
// choice for the whole diagram.
struct Diagram {
    std::vector<std::vector<int>> cartan;
    std::vector<long> d;
};

Diagram diagram(Lie t, int n) {
    Diagram dg;
    dg.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) dg.cartan[i][i] = 2;
    dg.d.assign(n, 1);
    auto edge = [&](int i, int j) { dg.cartan[i][j] = dg.cartan[j][i] = -1; };
    switch (t) {
        case Lie::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Lie::B:
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            dg.cartan[n - 1][n - 2] = -2;
            dg.cartan[n - 2][n - 1] = -1;
            for (int i = 0; i + 1 < n; ++i) dg.d[i] = 2;
            break;
        case Lie::C:
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            // alpha_n long
            dg.cartan[n - 1][n - 2] = -1;
            dg.cartan[n - 2][n - 1] = -2;
            dg.d[n - 1] = 2;
            break;
        case Lie::D:
            for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 2);
            edge(n - 3, n - 1);
            break;
        case Lie::E:
            // chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
            edge(0, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case Lie::F:
            edge(0, 1);
            edge(2, 3);
            // 2 => 3: alpha_1, alpha_2 long, alpha_3, alpha_4 short
            dg.cartan[2][1] = -2;
            dg.cartan[1][2] = -1;
            dg.d[0] = dg.d[1] = 2;
            break;
        case Lie::G:
            // alpha_1 short, alpha_2 long; theta = 3 alpha_1 + 2 alpha_2
            dg.cartan[0][1] = -3;
            dg.cartan[1][0] = -1;
            dg.d[1] = 3;
            break;
    }
    return dg;
}

} // namespace

int RootSystem::height(int r) const {
    const auto& c = roots[r];
    return std::accumulate(c.begin(), c.end(), 0);
}

int RootSystem::root_index(const std::vector<int>& coords) const {
    auto it = index_.find(coord_key(coords));
    return it == index_.end() ? -1 : it->second;
}

Rat RootSystem::inner_roots(int a, int b) const {
    Rat s = 0;
    const auto& ca = roots[a];
    const auto& cb = roots[b];
    for (int i = 0; i < rank; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (cb[j] == 0) continue;
            s += Rat(ca[i]) * Rat(cb[j]) * gram.at(i, j);
        }
    }
    return s;
}

Rat RootSystem::inner_simple(const Vec& v, int i) const {
    Rat s = 0;
    for (int j = 0; j < rank; ++j)
        if (v[j] != 0) s += v[j] * gram.at(j, i);
    return s;
}

Rat RootSystem::inner(const Vec& v, const Vec& w) const {
    Rat s = 0;
    for (int i = 0; i < rank; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (w[j] != 0) s += v[i] * w[j] * gram.at(i, j);
    }
    return s;
}

Rat RootSystem::pair_coroot(const Vec& v, int i) const {
    // sum_j v_j <alpha_j, alpha_i^vee> = sum_j v_j cartan[i][j]
    Rat s = 0;
    for (int j = 0; j < rank; ++j)
        if (v[j] != 0) s += v[j] * cartan[i][j];
    return s;
}

Vec RootSystem::root_vec(int r) const {
    Vec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = roots[r][i];
    return v;
}

Vec RootSystem::reflect(int s, const Vec& v) const {
    Rat c = pair_coroot(v, s);
    Vec w = v;
    w[s] -= c;
    return w;
}

Int RootSystem::weyl_order() const {
    Int f = 1;
    auto fact = [](int n) {
        Int r = 1;
        for (int i = 2; i <= n; ++i) r *= i;
        return r;
    };
    switch (type) {
        case Lie::A: return fact(rank + 1);
        case Lie::B:
        case Lie::C:
            f = fact(rank);
            for (int i = 0; i < rank; ++i) f *= 2;
            return f;
        case Lie::D:
            f = fact(rank);
            for (int i = 0; i < rank - 1; ++i) f *= 2;
            return f;
        case Lie::E:
            if (rank == 6) return Int(51840);
            if (rank == 7) return Int(2903040);
            return Int(696729600);
        case Lie::F: return Int(1152);
        case Lie::G: return Int(12);
    }
    return f;
}

RootSystem build_root_system(Lie type, int rank) {
    validate(type, rank);
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    Diagram dg = diagram(type, rank);
    rs.cartan = dg.cartan;
    rs.gram = Mat(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            // (alpha_i, alpha_j) = cartan[i][j] * d_i
            rs.gram.at(i, j) = Rat(dg.cartan[i][j]) * Rat(dg.d[i]);

    // orbit closure of the simple roots under the simple reflections
    std::vector<std::vector<int>> found;
    std::unordered_map<std::string, int> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> a(rank, 0);
        a[i] = 1;
        seen[coord_key(a)] = 0;
        found.push_back(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (int s = 0; s < rank; ++s) {
            int c = 0;
            for (int j = 0; j < rank; ++j) c += dg.cartan[s][j] * v[j];
            auto w = v;
            w[s] -= c;
            auto key = coord_key(w);
            if (!seen.count(key)) {
                seen[key] = 0;
                found.push_back(w);
                queue.push_back(w);
            }
        }
    }

    // positives sorted by (height, lex), negatives mirrored behind them
    std::vector<std::vector<int>> pos;
    for (auto& v : found) {
        int h = std::accumulate(v.begin(), v.end(), 0);
        if (h > 0) pos.push_back(v);
    }
    std::sort(pos.begin(), pos.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.num_pos = static_cast<int>(pos.size());
    rs.roots = pos;
    for (const auto& v : pos) {
        std::vector<int> neg(rank);
        for (int i = 0; i < rank; ++i) neg[i] = -v[i];
        rs.roots.push_back(neg);
    }
    for (size_t i = 0; i < rs.roots.size(); ++i) rs.index_[coord_key(rs.roots[i])] = static_cast<int>(i);

    // highest root: maximal height, coefficients dominate every root
    rs.theta = rs.num_pos - 1;
    for (int r = 0; r < rs.num_pos; ++r)
        for (int i = 0; i < rank; ++i)
            if (rs.roots[r][i] > rs.roots[rs.theta][i])
                throw Error("internal: highest root is not dominant");

    // reflection permutation tables
    rs.refl.assign(rank, std::vector<int>(rs.roots.size()));
    for (int s = 0; s < rank; ++s)
        for (size_t r = 0; r < rs.roots.size(); ++r) {
            const auto& v = rs.roots[r];
            int c = 0;
            for (int j = 0; j < rank; ++j) c += dg.cartan[s][j] * v[j];
            auto w = v;
            w[s] -= c;
            rs.refl[s][r] = rs.root_index(w);
        }
    return rs;
}

std::pair<Vec, WeylWord> dominant_rep(const RootSystem& rs, Vec v) {
    WeylWord w;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (rs.inner_simple(v, i) < 0) { neg = i; break; }
        if (neg < 0) break;
        v = rs.reflect(neg, v);
        w.gens.push_back(neg);
    }
    return {v, w};
}

Mat weyl_matrix(const RootSystem& rs, const WeylWord& w) {
    Mat m = Mat::identity(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        Vec col(rs.rank);
        col[j] = 1;
        for (int g : w.gens) col = rs.reflect(g, col);
        for (int i = 0; i < rs.rank; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Vec apply_word(const RootSystem& rs, const WeylWord& w, Vec v) {
    for (int g : w.gens) v = rs.reflect(g, v);
    return v;
}

} // namespace ggp
