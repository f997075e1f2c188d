#include "ggp/grading.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace ggp {

Vec solve_h(const RootSystem& rs, const NilpotentDatum& nd) {
    if (nd.J.size() != nd.labels.size()) throw InvalidInput("labels do not match J");
    int nj = static_cast<int>(nd.J.size());
    Vec h(rs.rank);
    if (nj == 0) return h;
    Mat g(nj, nj);
    Vec rhs(nj);
    for (int a = 0; a < nj; ++a) {
        rhs[a] = nd.labels[a];
        for (int b = 0; b < nj; ++b) g.at(a, b) = rs.gram.at(nd.J[a], nd.J[b]);
    }
    Vec t = inverse(g).mul(rhs);
    for (int a = 0; a < nj; ++a) h[nd.J[a]] = t[a];
    return h;
}

namespace {

// peel sl2 characters off a symmetric weight multiset, top-down
std::map<long, long> peel_sl2(std::map<long, long> weights) {
    std::map<long, long> mult;
    while (!weights.empty()) {
        auto top = weights.rbegin();
        long i = top->first;
        long c = top->second;
        if (i < 0 || c <= 0) throw NegativeMultiplicity();
        mult[i] += c;
        for (long w = i; w >= -i; w -= 2) {
            auto it = weights.find(w);
            if (it == weights.end() || it->second < c) throw NegativeMultiplicity();
            it->second -= c;
            if (it->second == 0) weights.erase(it);
        }
    }
    return mult;
}

} // namespace

Sl2Decomposition sl2_multiplicities(const RestrictedRootSystem& rr, const Vec& h) {
    const RootSystem& rs = *rr.rs;
    Sl2Decomposition dec;
    dec.h = h;
    dec.mult.resize(rr.elems.size());
    dec.d.resize(rr.elems.size());
    dec.circ.assign(rr.elems.size(), 0);

    auto weight_of = [&](int root) {
        Rat w = rs.inner(rs.root_vec(root), h);
        if (!is_integer(w)) throw InvalidInput("labels give a non-integral root weight");
        return static_cast<long>(w.get_num().get_si());
    };

    for (size_t e = 0; e < rr.elems.size(); ++e) {
        std::map<long, long> weights;
        for (int r : rr.elems[e].fiber) weights[weight_of(r)] += 1;
        dec.mult[e] = peel_sl2(std::move(weights));
        dec.d[e] = static_cast<int>(dec.mult[e].begin()->first) + 1;
        dec.circ[e] = dec.mult[e].count(0) != 0;
    }

    // zero fiber: Phi_J roots plus the Cartan
    {
        std::map<long, long> weights;
        weights[0] += rs.rank;
        for (size_t r = 0; r < rs.roots.size(); ++r) {
            bool in_span = true;
            for (int i : rr.I)
                if (rs.roots[r][i] != 0) { in_span = false; break; }
            if (in_span) weights[weight_of(static_cast<int>(r))] += 1;
        }
        dec.zero_mult = peel_sl2(std::move(weights));
    }

    // sanity: d(alpha) = d(-alpha)
    for (size_t e = 0; e < rr.elems.size(); ++e)
        if (dec.d[e] != dec.d[rr.negative_of(static_cast<int>(e))])
            throw Error("internal: d(alpha) != d(-alpha)");
    return dec;
}

namespace {

Vec ray_functional(const RestrictedRootSystem& rr, int ray) {
    Vec f(rr.m);
    for (int k = 0; k < rr.m; ++k) {
        Rat s = 0;
        for (int l = 0; l < rr.m; ++l)
            if (rr.rays[ray].primitive[l] != 0)
                s += Rat(rr.rays[ray].primitive[l]) * rr.gramJ.at(l, k);
        f[k] = s;
    }
    return f;
}

} // namespace

GoodGradingPolytope polytope(const RestrictedRootSystem& rr, const Sl2Decomposition& dec) {
    GoodGradingPolytope poly;
    poly.rr = &rr;
    for (int e : rr.positives) poly.pairs.emplace_back(e, dec.d[e]);

    // tightest bound per ray: |scale * (prim, p)| < d  =>  |(prim, p)| < d/scale
    std::map<int, Rat> best;
    for (int e : rr.positives) {
        int ray = rr.elems[e].ray;
        Rat b = Rat(dec.d[e]) / Rat(rr.elems[e].ray_scale);
        auto it = best.find(ray);
        if (it == best.end() || b < it->second) best[ray] = b;
    }
    for (auto& [ray, b] : best) poly.ray_bounds.push_back({ray, b});

    // prune: a bound is redundant if negating it (weakly) against all the
    // others is infeasible; the polytope is centrally symmetric, so one
    // side decides for the pair
    std::vector<char> keep(poly.ray_bounds.size(), 1);
    for (size_t k = 0; k < poly.ray_bounds.size(); ++k) {
        LinearSystem sys(rr.m);
        for (size_t l = 0; l < poly.ray_bounds.size(); ++l) {
            if (l == k) continue;
            if (!keep[l]) continue;
            Vec f = ray_functional(rr, poly.ray_bounds[l].ray);
            Vec nf = f;
            nf *= Rat(-1);
            sys.add_strict(f, poly.ray_bounds[l].bound);
            sys.add_strict(nf, poly.ray_bounds[l].bound);
        }
        Vec f = ray_functional(rr, poly.ray_bounds[k].ray);
        Vec nf = f;
        nf *= Rat(-1);
        sys.add_weak(nf, -poly.ray_bounds[k].bound); // f.p >= bound
        if (!feasible(sys)) keep[k] = 0;
    }
    for (size_t k = 0; k < poly.ray_bounds.size(); ++k)
        if (keep[k]) poly.irredundant.push_back(poly.ray_bounds[k]);

    // integrality lattice {p : (alpha, p) in Z for alpha in Phi_e^+}
    if (rr.m > 0) {
        Int den = 1;
        std::vector<Vec> funcs;
        for (int e : rr.positives) {
            Vec f(rr.m);
            for (int k = 0; k < rr.m; ++k) {
                Rat s = 0;
                for (int l = 0; l < rr.m; ++l)
                    if (rr.elems[e].icoords[l] != 0)
                        s += Rat(rr.elems[e].icoords[l]) * rr.gramJ.at(l, k);
                f[k] = s;
                den = den / gcd(den, s.get_den()) * s.get_den();
            }
            funcs.push_back(std::move(f));
        }
        std::vector<std::vector<Int>> rows;
        for (const Vec& f : funcs) {
            std::vector<Int> r(rr.m);
            for (int k = 0; k < rr.m; ++k) {
                Rat s = f[k] * Rat(den);
                r[k] = s.get_num();
            }
            rows.push_back(std::move(r));
        }
        auto hnf = lattice_hnf(rows);
        if (static_cast<int>(hnf.size()) != rr.m)
            throw Error("internal: restricted roots fail to span E^J");
        Mat R(rr.m, rr.m);
        for (int i = 0; i < rr.m; ++i)
            for (int j = 0; j < rr.m; ++j) R.at(i, j) = rat(hnf[i][j], den);
        Mat Rinv = inverse(R);
        for (int j = 0; j < rr.m; ++j) poly.lattice.push_back(Rinv.col(j));
    }
    return poly;
}

bool polytope_contains(const GoodGradingPolytope& poly, const Vec& p) {
    const RestrictedRootSystem& rr = *poly.rr;
    for (auto& [e, d] : poly.pairs) {
        Rat v = rr.eval(e, p);
        if (v >= d || -v >= d) return false;
    }
    return true;
}

namespace {

// all lattice points (spanned by `basis` in icoords) in a box that
// covers the polytope, unfiltered
std::vector<Vec> box_lattice_points(const GoodGradingPolytope& poly,
                                    const std::vector<Vec>& basis) {
    const RestrictedRootSystem& rr = *poly.rr;
    Mat L(rr.m, rr.m);
    for (int j = 0; j < rr.m; ++j)
        for (int i = 0; i < rr.m; ++i) L.at(i, j) = basis[j][i];

    // m independent ray functionals give |F p| < b, hence box bounds on
    // the lattice coordinates via (F L)^{-1}
    std::vector<Vec> sel;
    std::vector<Rat> selb;
    for (const auto& rb : poly.ray_bounds) {
        if (static_cast<int>(sel.size()) == rr.m) break;
        Vec f = ray_functional(rr, rb.ray);
        Mat trial(static_cast<int>(sel.size()) + 1, rr.m);
        for (size_t r = 0; r < sel.size(); ++r)
            for (int c = 0; c < rr.m; ++c) trial.at(static_cast<int>(r), c) = sel[r][c];
        for (int c = 0; c < rr.m; ++c) trial.at(static_cast<int>(sel.size()), c) = f[c];
        if (rank(trial) == static_cast<int>(sel.size()) + 1) {
            sel.push_back(f);
            selb.push_back(rb.bound);
        }
    }
    if (static_cast<int>(sel.size()) != rr.m) throw Error("internal: polytope is unbounded");
    Mat F(rr.m, rr.m);
    for (int r = 0; r < rr.m; ++r)
        for (int c = 0; c < rr.m; ++c) F.at(r, c) = sel[r][c];
    Mat FL_inv = inverse(F.mul(L));
    std::vector<long> hi(rr.m);
    long long cells = 1;
    for (int k = 0; k < rr.m; ++k) {
        Rat bound = 0;
        for (int r = 0; r < rr.m; ++r) {
            Rat a = FL_inv.at(k, r) * selb[r];
            bound += a < 0 ? -a : a;
        }
        hi[k] = floor_int(bound).get_si();
        cells *= 2 * hi[k] + 1;
        if (cells > 2000000) throw BudgetExceeded(cells, "integral point box too large");
    }

    std::vector<Vec> out;
    std::vector<long> x(rr.m, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == rr.m) {
            Vec p(rr.m);
            for (int i = 0; i < rr.m; ++i) {
                Rat s = 0;
                for (int j = 0; j < rr.m; ++j)
                    if (x[j] != 0) s += Rat(static_cast<long>(x[j])) * basis[j][i];
                p[i] = s;
            }
            out.push_back(std::move(p));
            return;
        }
        for (long v = -hi[k]; v <= hi[k]; ++v) {
            x[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

std::vector<Vec> integral_points(const GoodGradingPolytope& poly) {
    const RestrictedRootSystem& rr = *poly.rr;
    if (rr.m == 0) return {Vec(0)};
    std::vector<Vec> out;
    for (auto& p : box_lattice_points(poly, poly.lattice))
        if (polytope_contains(poly, p)) out.push_back(p);
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
        for (int i = 0; i < rr.m; ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    });
    return out;
}

Characteristic characteristic(const RootSystem& rs, const Vec& h, const Vec& p_evec) {
    Vec c = h;
    c += p_evec;
    auto [dom, w] = dominant_rep(rs, c);
    (void)w;
    Characteristic out;
    for (int i = 0; i < rs.rank; ++i) {
        Rat ci = rs.inner_simple(dom, i);
        out.labels.push_back(ci);
    }
    return out;
}

bool operator==(const Characteristic& a, const Characteristic& b) { return a.labels == b.labels; }

std::string to_display(const Characteristic& c) {
    std::string s;
    for (size_t i = 0; i < c.labels.size(); ++i) {
        if (i) s += ",";
        s += to_string(c.labels[i]);
    }
    return s;
}

bool adjacent_evals(const std::vector<Rat>& ep, const std::vector<Rat>& eq) {
    for (size_t i = 0; i < ep.size(); ++i) {
        Rat lo(below_int(ep[i]));
        Rat hi(above_int(ep[i]));
        if (eq[i] < lo || eq[i] > hi) return false;
    }
    return true;
}

std::vector<Rat> eval_vector(const RestrictedRootSystem& rr, const Vec& p) {
    std::vector<Rat> out;
    out.reserve(rr.positives.size());
    for (int e : rr.positives) out.push_back(rr.eval(e, p));
    return out;
}

bool adjacent(const GoodGradingPolytope& poly, const Vec& p, const Vec& q) {
    if (!polytope_contains(poly, p) || !polytope_contains(poly, q)) throw OutsidePolytope();
    return adjacent_evals(eval_vector(*poly.rr, p), eval_vector(*poly.rr, q));
}

namespace {

std::string vec_key(const Vec& v) {
    std::string k;
    for (int i = 0; i < v.size(); ++i) {
        k += to_string(v[i]);
        k += ',';
    }
    return k;
}

bool vec_lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

} // namespace

PointOrbits we_orbits(const std::vector<Vec>& points, const std::vector<Mat>& elements) {
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < points.size(); ++i) index[vec_key(points[i])] = static_cast<int>(i);
    PointOrbits out;
    std::vector<char> done(points.size(), 0);
    for (size_t i = 0; i < points.size(); ++i) {
        if (done[i]) continue;
        std::set<int> orbit;
        for (const Mat& g : elements) {
            Vec img = g.mul(points[i]);
            auto it = index.find(vec_key(img));
            if (it == index.end())
                throw Error("internal: group does not preserve the point set");
            orbit.insert(it->second);
        }
        std::vector<int> o(orbit.begin(), orbit.end());
        int rep = o[0];
        for (int j : o) {
            done[j] = 1;
            if (vec_lex_less(points[j], points[rep])) rep = j;
        }
        out.orbits.push_back(std::move(o));
        out.rep.push_back(rep);
    }
    return out;
}

ComponentData component_data(const RestrictedRootSystem& rr, const Sl2Decomposition& dec,
                             const std::vector<Mat>& we_elements) {
    ComponentData out;
    // base of Phi_e^circ from its positive half
    std::vector<char> circ_pos(rr.elems.size(), 0);
    for (int e : rr.positives) circ_pos[e] = dec.circ[e];
    for (int a : rr.positives) {
        if (!circ_pos[a]) continue;
        bool decomposable = false;
        for (int b : rr.positives) {
            if (!circ_pos[b] || b == a) continue;
            int c = rr.diff(a, b);
            if (c >= 0 && circ_pos[c]) { decomposable = true; break; }
        }
        if (!decomposable) out.delta_circ.push_back(a);
    }
    std::sort(out.delta_circ.begin(), out.delta_circ.end(), [&](int a, int b) {
        return rr.elems[a].icoords > rr.elems[b].icoords;
    });

    // W_e^circ: reflections in the simple circ roots
    std::vector<Mat> gens;
    for (int b : out.delta_circ) {
        Mat refl(rr.m, rr.m);
        Rat n2 = rr.inner_elems(b, b);
        for (int col = 0; col < rr.m; ++col) {
            Vec e(rr.m);
            e[col] = 1;
            Rat c = 2 * rr.eval(b, e) / n2;
            for (int i = 0; i < rr.m; ++i)
                refl.at(i, col) = (i == col ? Rat(1) : Rat(0)) - c * Rat(rr.elems[b].icoords[i]);
        }
        gens.push_back(std::move(refl));
    }
    out.w_circ = gens.empty() ? std::vector<Mat>{Mat::identity(rr.m)} : close_group(gens, 1000000);

    // Z_e: elements of W_e permuting Delta_e^circ
    std::set<std::string> delta_keys;
    for (int b : out.delta_circ) {
        Vec v(rr.m);
        for (int i = 0; i < rr.m; ++i) v[i] = rr.elems[b].icoords[i];
        delta_keys.insert(vec_key(v));
    }
    for (const Mat& g : we_elements) {
        bool stab = true;
        for (int b : out.delta_circ) {
            Vec v(rr.m);
            for (int i = 0; i < rr.m; ++i) v[i] = rr.elems[b].icoords[i];
            if (!delta_keys.count(vec_key(g.mul(v)))) { stab = false; break; }
        }
        if (stab) out.z_e.push_back(g);
    }
    return out;
}

AdjacencyGraph adjacency_graph(const RootSystem& rs, const RestrictedRootSystem& rr,
                               const Sl2Decomposition& dec, const GoodGradingPolytope& poly,
                               const std::vector<Mat>& we_elements) {
    AdjacencyGraph g;
    auto points = integral_points(poly);
    auto orbits = we_orbits(points, we_elements);
    int nclasses = static_cast<int>(orbits.orbits.size());
    for (int c = 0; c < nclasses; ++c) {
        const Vec& rep = points[orbits.rep[c]];
        g.reps.push_back(rep);
        g.labels.push_back(characteristic(rs, dec.h, rr.to_evec(rep)));
        bool zero = rep.is_zero();
        for (int j : orbits.orbits[c])
            if (points[j].is_zero()) zero = true;
        if (zero) g.dynkin_node = c;
    }
    for (int a = 0; a < nclasses; ++a) {
        auto ea = eval_vector(rr, points[orbits.rep[a]]);
        for (int b = a + 1; b < nclasses; ++b) {
            bool adj = false;
            for (int j : orbits.orbits[b]) {
                if (adjacent_evals(ea, eval_vector(rr, points[j]))) { adj = true; break; }
            }
            if (adj) g.edges.emplace_back(a, b);
        }
    }
    return g;
}

std::vector<NilpotentDatum> distinguished_labels(const RootSystem& rs, const std::vector<int>& J) {
    std::vector<int> Js = J;
    std::sort(Js.begin(), Js.end());
    int nj = static_cast<int>(Js.size());
    std::vector<NilpotentDatum> out;
    // roots of Phi_J
    std::vector<int> phiJ;
    for (size_t r = 0; r < rs.roots.size(); ++r) {
        bool in_span = true;
        for (int i = 0; i < rs.rank; ++i)
            if (rs.roots[r][i] != 0 &&
                std::find(Js.begin(), Js.end(), i) == Js.end()) { in_span = false; break; }
        if (in_span) phiJ.push_back(static_cast<int>(r));
    }
    for (int bits = 0; bits < (1 << nj); ++bits) {
        NilpotentDatum nd;
        nd.J = Js;
        for (int a = 0; a < nj; ++a) nd.labels.push_back((bits >> a) & 1 ? 2 : 0);
        Vec h = solve_h(rs, nd);
        long dim0 = nj, dim2 = 0;
        for (int r : phiJ) {
            Rat w = rs.inner(rs.root_vec(r), h);
            if (w == 0) ++dim0;
            if (w == 2) ++dim2;
        }
        if (dim0 == dim2) out.push_back(std::move(nd));
    }
    return out;
}

int levi_orbit_dim(const RootSystem& rs, const NilpotentDatum& nd) {
    // dim of the orbit of e inside [l,l]: dim [l,l] - dim centralizer,
    // and for a distinguished even grading dim centralizer = dim [l,l]_0
    Vec h = solve_h(rs, nd);
    int nj = static_cast<int>(nd.J.size());
    int dim_l = nj, dim0 = nj;
    for (size_t r = 0; r < rs.roots.size(); ++r) {
        bool in_span = true;
        for (int i = 0; i < rs.rank; ++i)
            if (rs.roots[r][i] != 0 &&
                std::find(nd.J.begin(), nd.J.end(), i) == nd.J.end()) { in_span = false; break; }
        if (!in_span) continue;
        ++dim_l;
        if (rs.inner(rs.root_vec(static_cast<int>(r)), h) == 0) ++dim0;
    }
    return dim_l - dim0;
}

std::vector<Vec> sample_points(const GoodGradingPolytope& poly, unsigned long seed, int extra) {
    const RestrictedRootSystem& rr = *poly.rr;
    std::vector<Vec> out;
    if (rr.m == 0) {
        out.push_back(Vec(0));
        return out;
    }
    // all half-lattice points of the bounding box, members and non-members alike
    std::vector<Vec> half;
    for (const Vec& v : poly.lattice) {
        Vec w = v;
        w *= rat(1, 2);
        half.push_back(w);
    }
    for (auto& p : box_lattice_points(poly, half)) out.push_back(p);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    for (int k = 0; k < extra; ++k) {
        Vec p(rr.m);
        for (int i = 0; i < rr.m; ++i) p[i] = rat(num(rng), 4 * den(rng));
        out.push_back(p);
    }
    return out;
}

} // namespace ggp
