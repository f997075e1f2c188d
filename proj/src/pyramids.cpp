#include "ggp/pyramids.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ggp {

Classical classical_from_string(const std::string& s) {
    if (s == "sl") return Classical::sl;
    if (s == "sp") return Classical::sp;
    if (s == "so") return Classical::so;
    throw InvalidInput("unknown classical type '" + s + "'");
}

std::string classical_to_string(Classical t) {
    switch (t) {
        case Classical::sl: return "sl";
        case Classical::sp: return "sp";
        case Classical::so: return "so";
    }
    return "?";
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw InvalidPartition("parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw InvalidPartition("parts must be weakly decreasing");
        total += parts[i];
    }
    if (parts.empty()) throw InvalidPartition("empty partition");
}

int Partition::mult(int part) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

void validate_partition(Classical type, const Partition& lam) {
    if (type == Classical::sl) return;
    for (int q : std::set<int>(lam.parts.begin(), lam.parts.end())) {
        int m = lam.mult(q);
        if (type == Classical::sp && q % 2 == 1 && m % 2 == 1)
            throw InvalidPartition("sp: odd part " + std::to_string(q) + " has odd multiplicity");
        if (type == Classical::so && q % 2 == 0 && m % 2 == 1)
            throw InvalidPartition("so: even part " + std::to_string(q) + " has odd multiplicity");
    }
    if (type == Classical::sp && lam.total % 2 == 1)
        throw InvalidPartition("sp needs an even total");
}

const Box& Pyramid::box(int id) const {
    for (const Box& b : boxes)
        if (b.id == id) return b;
    throw InvalidInput("no box with id " + std::to_string(id));
}

namespace {

// one centrally symmetric unit of rows, innermost first
struct RowUnit {
    enum Kind { Pair, Skew, SkewPair, Central } kind;
    int q = 0;  // part (Pair, Skew, Central) or larger part (SkewPair)
    int q2 = 0; // smaller part of a SkewPair
};

void place_row(std::vector<Box>& boxes, int row, int first_col, int count, bool skew) {
    for (int k = 0; k < count; ++k)
        boxes.push_back(Box{0, row, first_col + 2 * k, skew});
}

} // namespace

Pyramid build_pyramid(Classical type, const Partition& lam) {
    validate_partition(type, lam);
    Pyramid pyr(type, lam);

    std::vector<Box> boxes;
    if (type == Classical::sl) {
        // lambda_i boxes in row 2i-1, centered
        for (size_t i = 0; i < lam.parts.size(); ++i)
            place_row(boxes, 2 * static_cast<int>(i) + 1, 1 - lam.parts[i], lam.parts[i], false);
        // number bottom-to-top, left-to-right
        std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (size_t i = 0; i < boxes.size(); ++i) boxes[i].id = static_cast<int>(i) + 1;
        pyr.n = static_cast<int>(boxes.size());
        pyr.boxes = boxes;
        for (size_t i = 0; i < lam.parts.size(); ++i) {
            pyr.upper_rows.push_back(2 * static_cast<int>(i) + 1);
            pyr.lbar.push_back(lam.parts[i]);
        }
        return pyr;
    }

    // sp / so: build the list of row units from the center outwards
    std::vector<RowUnit> units;
    std::map<int, int> mult;
    for (int q : lam.parts) ++mult[q];
    bool so_odd = type == Classical::so && lam.total % 2 == 1;
    if (so_odd) {
        // largest odd part with odd multiplicity goes to the zeroth row
        int pick = 0;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            if (it->first % 2 == 1 && it->second % 2 == 1) { pick = it->first; break; }
        if (pick == 0) throw InvalidPartition("so odd: no odd part of odd multiplicity");
        units.push_back(RowUnit{RowUnit::Central, pick, 0});
        --mult[pick];
    }
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        int q = it->first;
        int m = it->second;
        if (m == 0) continue;
        if (m % 2 == 1) {
            if (type == Classical::sp) {
                units.push_back(RowUnit{RowUnit::Skew, q, 0});
            } else {
                // pair with the next smaller odd-multiplicity part
                int q2 = 0;
                for (auto jt = std::next(it); jt != mult.rend(); ++jt)
                    if (jt->second % 2 == 1) { q2 = jt->first; --jt->second; break; }
                if (q2 == 0) throw InvalidPartition("so: unmatched odd-multiplicity part");
                units.push_back(RowUnit{RowUnit::SkewPair, q, q2});
            }
            --m;
        }
        for (int k = 0; k < m / 2; ++k) units.push_back(RowUnit{RowUnit::Pair, q, 0});
    }

    bool center = !units.empty() &&
                  (units[0].kind == RowUnit::Central ||
                   (type == Classical::sp && units[0].kind == RowUnit::Skew));
    for (size_t u = 0; u < units.size(); ++u) {
        int level;
        if (center)
            level = 2 * static_cast<int>(u);
        else
            level = 2 * static_cast<int>(u) + 1;
        const RowUnit& unit = units[u];
        switch (unit.kind) {
            case RowUnit::Central:
                place_row(boxes, 0, 1 - unit.q, unit.q, true);
                break;
            case RowUnit::Skew:
                if (level == 0) {
                    place_row(boxes, 0, 1 - unit.q, unit.q, true);
                } else {
                    place_row(boxes, level, 1, unit.q / 2, true);
                    place_row(boxes, -level, 1 - unit.q, unit.q / 2, true);
                }
                break;
            case RowUnit::SkewPair:
                place_row(boxes, level, 1 - unit.q2, (unit.q + unit.q2) / 2, true);
                place_row(boxes, -level, 1 - unit.q, (unit.q + unit.q2) / 2, true);
                break;
            case RowUnit::Pair:
                place_row(boxes, level, 1 - unit.q, unit.q, false);
                place_row(boxes, -level, 1 - unit.q, unit.q, false);
                pyr.upper_rows.push_back(level);
                pyr.lbar.push_back(unit.q);
                break;
        }
    }
    // upper rows ascending (units were built inner to outer already)
    // numbering: positive boxes are row > 0 or (row == 0, col > 0),
    // ordered by (row, col); negatives mirror them
    std::vector<Box*> positive;
    for (Box& b : boxes)
        if (b.row > 0 || (b.row == 0 && b.col > 0)) positive.push_back(&b);
    std::sort(positive.begin(), positive.end(), [](const Box* a, const Box* b) {
        return a->row != b->row ? a->row < b->row : a->col < b->col;
    });
    int next = 1;
    for (Box* b : positive) b->id = next++;
    pyr.n = next - 1;
    for (Box& b : boxes) {
        if (b.row > 0 || (b.row == 0 && b.col > 0)) continue;
        if (b.row == 0 && b.col == 0) {
            b.id = 0;
            pyr.has_zero = true;
            continue;
        }
        for (const Box* p : positive)
            if (p->row == -b.row && p->col == -b.col) { b.id = -p->id; break; }
    }
    pyr.boxes = boxes;
    return pyr;
}

namespace {

// sign of e_{i,j} in the fixed basis of the classical algebra
Rat sigma(Classical type, int i, int j) {
    if (type == Classical::sl) return Rat(1);
    if (type == Classical::sp) {
        if (i < 0 && j < 0) return Rat(-1);
        return Rat(1);
    }
    // so
    if (i == 0 && j == 0) return Rat(0);
    if (j == 0) return i > 0 ? Rat(1) : Rat(-1); // e_{k,0} - e_{0,-k}; e_{-k,0} from e_{0,k} - e_{-k,0}
    if (i == 0) return j > 0 ? Rat(1) : Rat(-1); // e_{0,k}; e_{0,-k}
    if (i > 0 && j > 0) return Rat(1);
    if (i < 0 && j < 0) return Rat(-1);
    if (i > 0 && j < 0) {
        if (i == -j) return Rat(0);
        return i < -j ? Rat(1) : Rat(-1);
    }
    // i < 0 < j
    if (-i == j) return Rat(0);
    return -i > j ? Rat(1) : Rat(-1);
}

} // namespace

Rat SparseMat::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Rat(0) : it->second;
}

std::pair<SparseMat, SparseMat> matrices(const Pyramid& pyr) {
    SparseMat e, h;
    std::set<std::pair<int, int>> pairs;
    for (const Box& bi : pyr.boxes) {
        h.entries[{bi.id, bi.id}] = Rat(bi.col);
        for (const Box& bj : pyr.boxes) {
            if (bi.row == bj.row && bi.col == bj.col + 2) pairs.insert({bi.id, bj.id});
            if (pyr.type == Classical::sp) {
                if (bi.row == -bj.row && bi.row >= 0 && bi.skew && bi.col == 1 && bj.col == -1)
                    pairs.insert({bi.id, bj.id});
            } else if (pyr.type == Classical::so) {
                if (bi.row == -bj.row && bi.row >= 0 && bi.skew &&
                    ((bi.col == 2 && bj.col == 0) || (bi.col == 0 && bj.col == -2)))
                    pairs.insert({bi.id, bj.id});
            }
        }
    }
    for (auto& [i, j] : pairs) {
        Rat s = sigma(pyr.type, i, j);
        if (s == 0) throw Error("internal: e-term outside the algebra");
        e.entries[{i, j}] = s;
    }
    return {e, h};
}

ClassicalNilpotent restricted_data(Classical type, const Partition& lam) {
    ClassicalNilpotent cn{type, lam, build_pyramid(type, lam), {}, {}, 0, {}, {}, false};
    auto [e, h] = matrices(cn.pyr);
    cn.e = e;
    cn.h = h;
    for (const Box& b : cn.pyr.boxes)
        if (b.skew) cn.has_skew = true;

    const std::vector<int>& lbar = type == Classical::sl ? lam.parts : cn.pyr.lbar;
    cn.m = static_cast<int>(lbar.size());

    auto push = [&](std::vector<int> eps, int d) {
        cn.phi_pos.push_back(ClassicalRoot{std::move(eps), d});
    };
    if (type == Classical::sl) {
        for (int i = 0; i < cn.m; ++i)
            for (int j = i + 1; j < cn.m; ++j) {
                std::vector<int> v(cn.m, 0);
                v[i] = 1;
                v[j] = -1;
                push(std::move(v), 1 + lbar[i] - lbar[j]);
            }
    } else {
        // odd-multiplicity parts of lam, for d(eps_h)
        std::vector<int> odd_parts;
        for (int q : std::set<int>(lam.parts.begin(), lam.parts.end()))
            if (lam.mult(q) % 2 == 1) odd_parts.push_back(q);
        for (int i = 0; i < cn.m; ++i)
            for (int j = i + 1; j < cn.m; ++j)
                for (int s : {-1, 1}) {
                    std::vector<int> v(cn.m, 0);
                    v[i] = 1;
                    v[j] = s;
                    push(std::move(v), 1 + lbar[i] - lbar[j]);
                }
        for (int k = 0; k < cn.m; ++k) {
            bool odd = lbar[k] % 2 == 1;
            bool include = type == Classical::sp || lbar[k] != 1;
            if (include) {
                std::vector<int> v(cn.m, 0);
                v[k] = 2;
                int d = type == Classical::sp ? (odd ? 1 : 3) : (odd ? 3 : 1);
                push(std::move(v), d);
            }
        }
        if (cn.has_skew) {
            for (int hh = 0; hh < cn.m; ++hh) {
                int best = -1;
                for (int t : odd_parts) {
                    int v = std::abs(lbar[hh] - t);
                    if (best < 0 || v < best) best = v;
                }
                if (best < 0) throw Error("internal: skew rows without odd-multiplicity parts");
                std::vector<int> v(cn.m, 0);
                v[hh] = 1;
                push(std::move(v), 1 + best);
            }
        }
    }

    // W_e generators
    auto perm_gen = [&](int i, int j) {
        Mat g = Mat::identity(cn.m);
        g.at(i, i) = g.at(j, j) = 0;
        g.at(i, j) = g.at(j, i) = 1;
        return g;
    };
    auto flip_gen = [&](std::vector<int> ks) {
        Mat g = Mat::identity(cn.m);
        for (int k : ks) g.at(k, k) = -1;
        return g;
    };
    for (int i = 0; i + 1 < cn.m; ++i)
        if (lbar[i] == lbar[i + 1]) cn.we_gens.push_back(perm_gen(i, i + 1));
    if (type != Classical::sl) {
        bool free_flips = type == Classical::sp || cn.has_skew;
        if (free_flips) {
            for (int k = 0; k < cn.m; ++k) cn.we_gens.push_back(flip_gen({k}));
        } else {
            std::vector<int> odd_pos;
            for (int k = 0; k < cn.m; ++k) {
                if (lbar[k] % 2 == 0)
                    cn.we_gens.push_back(flip_gen({k}));
                else
                    odd_pos.push_back(k);
            }
            for (size_t a = 0; a < odd_pos.size(); ++a)
                for (size_t b = a + 1; b < odd_pos.size(); ++b)
                    cn.we_gens.push_back(flip_gen({odd_pos[a], odd_pos[b]}));
        }
    }
    return cn;
}

std::vector<Rat> classical_eval_vector(const ClassicalNilpotent& cn, const Vec& p) {
    std::vector<Rat> out;
    out.reserve(cn.phi_pos.size());
    for (const auto& r : cn.phi_pos) {
        Rat s = 0;
        for (int k = 0; k < cn.m; ++k)
            if (r.eps[k] != 0) s += Rat(r.eps[k]) * p[k];
        out.push_back(s);
    }
    return out;
}

bool classical_contains(const ClassicalNilpotent& cn, const Vec& p) {
    if (cn.sl_constraint()) {
        Rat t = 0;
        for (int k = 0; k < cn.m; ++k) t += Rat(cn.lam.parts[k]) * p[k];
        if (t != 0) return false;
    }
    auto ev = classical_eval_vector(cn, p);
    for (size_t a = 0; a < ev.size(); ++a)
        if (ev[a] >= cn.phi_pos[a].d || -ev[a] >= cn.phi_pos[a].d) return false;
    return true;
}

std::vector<Vec> classical_integral_points(const ClassicalNilpotent& cn) {
    // subspace basis of E_e inside R^m
    std::vector<Vec> B;
    if (cn.sl_constraint()) {
        Mat c(1, cn.m);
        for (int k = 0; k < cn.m; ++k) c.at(0, k) = cn.lam.parts[k];
        B = kernel_basis(c);
    } else {
        for (int k = 0; k < cn.m; ++k) {
            Vec e(cn.m);
            e[k] = 1;
            B.push_back(e);
        }
    }
    int dim = static_cast<int>(B.size());
    if (dim == 0) return {Vec(cn.m)};
    if (cn.phi_pos.empty()) throw InvalidInput("good grading polytope is unbounded");

    // functionals restricted to the subspace
    std::vector<Vec> funcs;
    std::vector<Rat> bounds;
    for (const auto& r : cn.phi_pos) {
        Vec f(dim);
        for (int k = 0; k < dim; ++k) {
            Rat s = 0;
            for (int l = 0; l < cn.m; ++l)
                if (r.eps[l] != 0) s += Rat(r.eps[l]) * B[static_cast<size_t>(k)][l];
            f[k] = s;
        }
        funcs.push_back(std::move(f));
        bounds.push_back(Rat(r.d));
    }

    // integrality lattice via HNF of the functional row span
    Int den = 1;
    for (const Vec& f : funcs)
        for (int k = 0; k < dim; ++k) den = den / gcd(den, f[k].get_den()) * f[k].get_den();
    std::vector<std::vector<Int>> rows;
    for (const Vec& f : funcs) {
        std::vector<Int> r(dim);
        for (int k = 0; k < dim; ++k) r[k] = Rat(f[k] * Rat(den)).get_num();
        rows.push_back(std::move(r));
    }
    auto hnf = lattice_hnf(rows);
    if (static_cast<int>(hnf.size()) != dim) throw InvalidInput("good grading polytope is unbounded");
    Mat R(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) R.at(i, j) = rat(hnf[i][j], den);
    Mat L = inverse(R); // columns: lattice basis in subspace coordinates

    // box bounds from an independent subset of the functionals
    std::vector<Vec> sel;
    std::vector<Rat> selb;
    for (size_t i = 0; i < funcs.size() && static_cast<int>(sel.size()) < dim; ++i) {
        Mat trial(static_cast<int>(sel.size()) + 1, dim);
        for (size_t r = 0; r < sel.size(); ++r)
            for (int c = 0; c < dim; ++c) trial.at(static_cast<int>(r), c) = sel[r][c];
        for (int c = 0; c < dim; ++c) trial.at(static_cast<int>(sel.size()), c) = funcs[i][c];
        if (rank(trial) == static_cast<int>(sel.size()) + 1) {
            sel.push_back(funcs[i]);
            selb.push_back(bounds[i]);
        }
    }
    if (static_cast<int>(sel.size()) != dim) throw InvalidInput("good grading polytope is unbounded");
    Mat F(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) F.at(r, c) = sel[r][c];
    Mat FL_inv = inverse(F.mul(L));
    std::vector<long> hi(dim);
    for (int k = 0; k < dim; ++k) {
        Rat b = 0;
        for (int r = 0; r < dim; ++r) {
            Rat a = FL_inv.at(k, r) * selb[r];
            b += a < 0 ? -a : a;
        }
        hi[k] = floor_int(b).get_si();
    }

    std::vector<Vec> out;
    std::vector<long> x(dim, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == dim) {
            // p = B (L x)
            Vec p(cn.m);
            for (int c = 0; c < dim; ++c) {
                Rat lc = 0;
                for (int j = 0; j < dim; ++j)
                    if (x[j] != 0) lc += Rat(static_cast<long>(x[j])) * L.at(c, j);
                if (lc == 0) continue;
                for (int l = 0; l < cn.m; ++l) p[l] += lc * B[static_cast<size_t>(c)][l];
            }
            if (classical_contains(cn, p)) out.push_back(std::move(p));
            return;
        }
        for (long v = -hi[k]; v <= hi[k]; ++v) {
            x[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
        for (int i = 0; i < cn.m; ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    });
    return out;
}

std::map<int, Rat> shifted_columns(const ClassicalNilpotent& cn, const Vec& p) {
    std::map<int, Rat> col;
    const std::vector<int>& rows = cn.pyr.upper_rows;
    for (const Box& b : cn.pyr.boxes) {
        Rat c(b.col);
        if (!b.skew) {
            for (size_t i = 0; i < rows.size(); ++i) {
                if (b.row == rows[i]) c += p[static_cast<int>(i)];
                if (b.row == -rows[i] && cn.type != Classical::sl) c -= p[static_cast<int>(i)];
            }
        }
        col[b.id] = c;
    }
    return col;
}

Characteristic classical_characteristic(const ClassicalNilpotent& cn, const Vec& p) {
    if (!classical_contains(cn, p)) throw OutsidePolytope();
    auto col = shifted_columns(cn, p);
    Characteristic out;
    if (cn.type == Classical::sl) {
        std::vector<Rat> vals;
        for (const Box& b : cn.pyr.boxes) vals.push_back(col[b.id]);
        std::sort(vals.begin(), vals.end(), std::greater<Rat>());
        for (size_t i = 0; i + 1 < vals.size(); ++i) out.labels.push_back(vals[i] - vals[i + 1]);
        return out;
    }
    int n = cn.pyr.n;
    if (n < 2 && cn.type == Classical::so && cn.lam.total % 2 == 0)
        throw Unsupported("so_2 has no labelled diagram");
    std::vector<Rat> vals;
    int negs = 0;
    bool has_zero_col = false;
    for (int i = 1; i <= n; ++i) {
        Rat c = col[i];
        if (c < 0) {
            ++negs;
            c = -c;
        }
        if (c == 0) has_zero_col = true;
        vals.push_back(c);
    }
    std::sort(vals.begin(), vals.end(), std::greater<Rat>());
    bool even_N = cn.lam.total % 2 == 0;
    if (cn.type == Classical::so && even_N) {
        // D_n: only an even number of sign changes; a zero column absorbs parity
        if (negs % 2 == 1 && !has_zero_col) vals[n - 1] = -vals[n - 1];
    }
    for (int i = 0; i + 1 < n; ++i) out.labels.push_back(vals[i] - vals[i + 1]);
    if (cn.type == Classical::sp)
        out.labels.push_back(2 * vals[n - 1]);
    else if (!even_N)
        out.labels.push_back(vals[n - 1]);
    else
        out.labels.push_back(vals[n - 2] + vals[n - 1]);
    return out;
}

namespace {

// basis of the classical algebra as explicit matrices, each homogeneous
// for any pyramid grading
struct AlgebraBasis {
    std::vector<int> ids; // box ids = matrix indices
    std::map<int, int> pos;
    std::vector<SparseMat> elems;
};

AlgebraBasis algebra_basis(const ClassicalNilpotent& cn) {
    AlgebraBasis ab;
    for (const Box& b : cn.pyr.boxes) ab.ids.push_back(b.id);
    std::sort(ab.ids.begin(), ab.ids.end());
    for (size_t i = 0; i < ab.ids.size(); ++i) ab.pos[ab.ids[i]] = static_cast<int>(i);
    int n = cn.pyr.n;
    auto unit = [&](int i, int j, Rat c) {
        SparseMat m;
        m.entries[{i, j}] = c;
        return m;
    };
    auto add2 = [&](int i1, int j1, Rat c1, int i2, int j2, Rat c2) {
        SparseMat m;
        m.entries[{i1, j1}] += c1;
        m.entries[{i2, j2}] += c2;
        ab.elems.push_back(m);
    };
    if (cn.type == Classical::sl) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) ab.elems.push_back(unit(i, j, Rat(1)));
        for (int k = 1; k < n; ++k) add2(k, k, Rat(1), k + 1, k + 1, Rat(-1));
        return ab;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add2(i, j, Rat(1), -j, -i, Rat(-1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (cn.type == Classical::sp) {
                add2(i, -j, Rat(1), j, -i, Rat(1));
                add2(-i, j, Rat(1), -j, i, Rat(1));
            } else {
                add2(i, -j, Rat(1), j, -i, Rat(-1));
                add2(-j, i, Rat(1), -i, j, Rat(-1));
            }
        }
    if (cn.type == Classical::sp) {
        for (int k = 1; k <= n; ++k) {
            ab.elems.push_back(unit(k, -k, Rat(1)));
            ab.elems.push_back(unit(-k, k, Rat(1)));
        }
    } else if (cn.pyr.has_zero) {
        for (int k = 1; k <= n; ++k) {
            add2(k, 0, Rat(1), 0, -k, Rat(-1));
            add2(0, k, Rat(1), -k, 0, Rat(-1));
        }
    }
    return ab;
}

SparseMat bracket(const SparseMat& a, const SparseMat& b) {
    SparseMat c;
    for (auto& [ij, va] : a.entries)
        for (auto& [kl, vb] : b.entries) {
            if (ij.second == kl.first) c.entries[{ij.first, kl.second}] += va * vb;
            if (kl.second == ij.first) c.entries[{kl.first, ij.second}] -= vb * va;
        }
    for (auto it = c.entries.begin(); it != c.entries.end();)
        it = it->second == 0 ? c.entries.erase(it) : std::next(it);
    return c;
}

} // namespace

bool classical_oracle(const ClassicalNilpotent& cn, const Vec& p) {
    if (cn.sl_constraint()) {
        Rat t = 0;
        for (int k = 0; k < cn.m; ++k) t += Rat(cn.lam.parts[k]) * p[k];
        if (t != 0) throw InvalidInput("sl point violates the trace constraint");
    }
    auto col = shifted_columns(cn, p);
    AlgebraBasis ab = algebra_basis(cn);

    // degree of a homogeneous basis element
    auto degree_of = [&](const SparseMat& x) {
        bool first = true;
        Rat d = 0;
        for (auto& [ij, v] : x.entries) {
            (void)v;
            Rat dd = col[ij.first] - col[ij.second];
            if (first) {
                d = dd;
                first = false;
            } else if (dd != d) {
                throw Error("internal: basis element not homogeneous");
            }
        }
        return d;
    };

    std::map<Rat, std::vector<int>> by_deg;
    for (size_t i = 0; i < ab.elems.size(); ++i) by_deg[degree_of(ab.elems[i])].push_back(static_cast<int>(i));

    // e must sit in degree 2
    for (auto& [ij, v] : cn.e.entries) {
        (void)v;
        if (col[ij.first] - col[ij.second] != 2) return false;
    }

    int nids = static_cast<int>(ab.ids.size());
    auto flat = [&](const SparseMat& m) {
        Vec v(nids * nids);
        for (auto& [ij, val] : m.entries)
            v[ab.pos[ij.first] * nids + ab.pos[ij.second]] = val;
        return v;
    };
    auto rank_from = [&](const Rat& d) {
        auto it = by_deg.find(d);
        if (it == by_deg.end()) return 0;
        Mat m(nids * nids, static_cast<int>(it->second.size()));
        for (size_t c = 0; c < it->second.size(); ++c) {
            Vec v = flat(bracket(cn.e, ab.elems[it->second[c]]));
            for (int r = 0; r < nids * nids; ++r) m.at(r, static_cast<int>(c)) = v[r];
        }
        return rank(m);
    };

    for (auto& [d, idxs] : by_deg) {
        if (d <= -1 && rank_from(d) != static_cast<int>(idxs.size())) return false;
        if (d >= 1 && rank_from(d - 2) != static_cast<int>(idxs.size())) return false;
    }
    return true;
}

std::vector<int> jordan_type(const ClassicalNilpotent& cn) {
    AlgebraBasis ab = algebra_basis(cn);
    int n = static_cast<int>(ab.ids.size());
    Mat E(n, n);
    for (auto& [ij, v] : cn.e.entries) E.at(ab.pos[ij.first], ab.pos[ij.second]) = v;
    std::vector<int> ranks{n}; // rank of e^0
    Mat P = E;
    while (true) {
        int r = rank(P);
        ranks.push_back(r);
        if (r == 0) break;
        P = P.mul(E);
    }
    std::vector<int> type;
    for (size_t s = 1; s < ranks.size(); ++s) {
        int blocks_ge = ranks[s - 1] - ranks[s];
        int blocks_gt = s < ranks.size() - 1 ? ranks[s] - ranks[s + 1] : 0;
        for (int k = 0; k < blocks_ge - blocks_gt; ++k) type.push_back(static_cast<int>(s));
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

NilpotentDatum sl_datum(const Partition& lam) {
    NilpotentDatum nd;
    int cum = 0;
    std::set<int> removed;
    for (size_t i = 0; i + 1 < lam.parts.size(); ++i) {
        cum += lam.parts[i];
        removed.insert(cum - 1); // 0-based index of the removed node
    }
    for (int i = 0; i < lam.total - 1; ++i)
        if (!removed.count(i)) nd.J.push_back(i);
    nd.labels.assign(nd.J.size(), 2);
    return nd;
}

ClassicalGraph classical_adjacency_graph(const ClassicalNilpotent& cn) {
    ClassicalGraph g;
    auto points = classical_integral_points(cn);
    auto elements = cn.we_gens.empty() ? std::vector<Mat>{Mat::identity(cn.m)}
                                       : close_group(cn.we_gens, 1000000);
    auto orbits = we_orbits(points, elements);
    int nclasses = static_cast<int>(orbits.orbits.size());
    for (int c = 0; c < nclasses; ++c) {
        const Vec& rep = points[orbits.rep[c]];
        g.reps.push_back(rep);
        g.labels.push_back(classical_characteristic(cn, rep));
        for (int j : orbits.orbits[c])
            if (points[j].is_zero()) g.dynkin_node = c;
    }
    for (int a = 0; a < nclasses; ++a) {
        auto ea = classical_eval_vector(cn, points[orbits.rep[a]]);
        for (int b = a + 1; b < nclasses; ++b) {
            bool adj = false;
            for (int j : orbits.orbits[b])
                if (adjacent_evals(ea, classical_eval_vector(cn, points[j]))) { adj = true; break; }
            if (adj) g.edges.emplace_back(a, b);
        }
    }
    return g;
}

} // namespace ggp
