#include "ggp/restrict.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace ggp {

namespace {

std::string ikey(const std::vector<int>& c) {
    std::string k;
    k.reserve(c.size() * 3);
    for (int x : c) {
        k += std::to_string(x);
        k += ',';
    }
    return k;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) { return a > b; }

std::string mat_key(const Mat& m) {
    std::string k;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            k += to_string(m.at(i, j));
            k += ',';
        }
    return k;
}

} // namespace

int RestrictedRootSystem::elem_index(const std::vector<int>& icoords) const {
    auto it = index_.find(ikey(icoords));
    return it == index_.end() ? -1 : it->second;
}

Rat RestrictedRootSystem::inner_elems(int a, int b) const {
    return rs->inner(elems[a].evec, elems[b].evec);
}

Rat RestrictedRootSystem::eval(int a, const Vec& x) const {
    // (elems[a], sum_k x_k alpha_{I_k}^J) = sum_k x_k  (icoords(a) . gramJ col k)
    Rat s = 0;
    const auto& ic = elems[a].icoords;
    for (int k = 0; k < m; ++k) {
        if (x[k] == 0) continue;
        Rat col = 0;
        for (int l = 0; l < m; ++l)
            if (ic[l] != 0) col += Rat(ic[l]) * gramJ.at(l, k);
        s += col * x[k];
    }
    return s;
}

Vec RestrictedRootSystem::to_evec(const Vec& icoords) const {
    Vec v(rs->rank);
    for (int k = 0; k < m; ++k) {
        if (icoords[k] == 0) continue;
        for (int i = 0; i < rs->rank; ++i) v[i] += icoords[k] * basisJ[k][i];
    }
    return v;
}

RestrictedRootSystem restrict_roots(const RootSystem& rs, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    for (size_t i = 0; i + 1 < J.size(); ++i)
        if (J[i] == J[i + 1]) throw InvalidInput("duplicate index in J");
    for (int j : J)
        if (j < 0 || j >= rs.rank) throw InvalidInput("J index out of range");

    RestrictedRootSystem rr;
    rr.rs = &rs;
    rr.J = J;
    for (int i = 0; i < rs.rank; ++i)
        if (std::find(J.begin(), J.end(), i) == J.end()) rr.I.push_back(i);
    rr.m = static_cast<int>(rr.I.size());

    // alpha_i^J = alpha_i - (projection onto E_J), via the Gram system
    int nj = static_cast<int>(J.size());
    Mat gj(nj, nj);
    for (int a = 0; a < nj; ++a)
        for (int b = 0; b < nj; ++b) gj.at(a, b) = rs.gram.at(J[a], J[b]);
    Mat gj_inv = nj > 0 ? inverse(gj) : Mat();
    auto project = [&](const Vec& v) {
        if (nj == 0) return v;
        Vec rhs(nj);
        for (int a = 0; a < nj; ++a) rhs[a] = rs.inner_simple(v, J[a]);
        Vec x = gj_inv.mul(rhs);
        Vec out = v;
        for (int a = 0; a < nj; ++a) out[J[a]] -= x[a];
        return out;
    };
    for (int k = 0; k < rr.m; ++k) {
        Vec e(rs.rank);
        e[rr.I[k]] = 1;
        rr.basisJ.push_back(project(e));
    }
    rr.gramJ = Mat(rr.m, rr.m);
    for (int a = 0; a < rr.m; ++a)
        for (int b = 0; b < rr.m; ++b) rr.gramJ.at(a, b) = rs.inner(rr.basisJ[a], rr.basisJ[b]);

    // dedup restrictions by I-coordinates
    for (size_t r = 0; r < rs.roots.size(); ++r) {
        std::vector<int> ic(rr.m);
        bool nonzero = false;
        for (int k = 0; k < rr.m; ++k) {
            ic[k] = rs.roots[r][rr.I[k]];
            nonzero = nonzero || ic[k] != 0;
        }
        if (!nonzero) continue; // root of Phi_J
        auto key = ikey(ic);
        auto it = rr.index_.find(key);
        if (it == rr.index_.end()) {
            RestrictedRoot e;
            e.icoords = ic;
            Vec ivec(rr.m);
            for (int k = 0; k < rr.m; ++k) ivec[k] = ic[k];
            e.evec = rr.to_evec(ivec);
            e.positive = *std::find_if(ic.begin(), ic.end(), [](int x) { return x != 0; }) > 0;
            rr.index_[key] = static_cast<int>(rr.elems.size());
            it = rr.index_.find(key);
            rr.elems.push_back(std::move(e));
        }
        rr.elems[it->second].fiber.push_back(static_cast<int>(r));
    }
    int n = static_cast<int>(rr.elems.size());
    for (int e = 0; e < n; ++e)
        if (rr.elems[e].positive) rr.positives.push_back(e);

    rr.neg_.resize(n);
    rr.diff_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        std::vector<int> nc(rr.m);
        for (int k = 0; k < rr.m; ++k) nc[k] = -rr.elems[a].icoords[k];
        rr.neg_[a] = rr.elem_index(nc);
        for (int b = 0; b < n; ++b) {
            std::vector<int> d(rr.m);
            for (int k = 0; k < rr.m; ++k) d[k] = rr.elems[a].icoords[k] - rr.elems[b].icoords[k];
            rr.diff_[static_cast<size_t>(a) * n + b] = rr.elem_index(d);
        }
    }

    // proportionality classes
    for (int e = 0; e < n; ++e) {
        if (rr.elems[e].ray >= 0) continue;
        std::vector<int> prim = rr.elems[e].icoords;
        int g = 0;
        for (int x : prim) g = std::gcd(g, std::abs(x));
        for (int& x : prim) x /= g;
        int lead = *std::find_if(prim.begin(), prim.end(), [](int x) { return x != 0; });
        if (lead < 0)
            for (int& x : prim) x = -x;
        Ray ray;
        ray.primitive = prim;
        int ridx = static_cast<int>(rr.rays.size());
        int lead_idx = 0;
        while (prim[lead_idx] == 0) ++lead_idx;
        for (int o = 0; o < n; ++o) {
            const auto& oc = rr.elems[o].icoords;
            // oc proportional to prim: one nonzero scale fits every entry
            bool prop = oc[lead_idx] != 0 && oc[lead_idx] % prim[lead_idx] == 0;
            int scale = prop ? oc[lead_idx] / prim[lead_idx] : 0;
            for (int k = 0; k < rr.m && prop; ++k) prop = oc[k] == scale * prim[k];
            if (prop && scale != 0) {
                rr.elems[o].ray = ridx;
                rr.elems[o].ray_scale = scale;
                ray.members.push_back(o);
            }
        }
        Vec pv(rr.m);
        for (int k = 0; k < rr.m; ++k) pv[k] = prim[k];
        ray.normal_evec = rr.to_evec(pv);
        rr.rays.push_back(std::move(ray));
    }

    if (rr.m > 0 && !rr.elems.empty()) {
        std::vector<int> th(rr.m);
        for (int k = 0; k < rr.m; ++k) th[k] = rs.roots[rs.theta][rr.I[k]];
        rr.theta = rr.elem_index(th);
    }
    return rr;
}

RBase base_from_regular(const RestrictedRootSystem& rr, const std::vector<Vec>& gamma_lex) {
    int n = static_cast<int>(rr.elems.size());
    std::vector<char> pos(n, 0);
    for (int e = 0; e < n; ++e) {
        int sign = 0;
        for (const Vec& g : gamma_lex) {
            Rat v = rr.rs->inner(rr.elems[e].evec, g);
            if (v > 0) { sign = 1; break; }
            if (v < 0) { sign = -1; break; }
        }
        if (sign == 0) throw NonRegular();
        pos[e] = sign > 0;
    }
    std::vector<int> P;
    for (int e = 0; e < n; ++e)
        if (pos[e]) P.push_back(e);
    RBase base;
    for (int a : P) {
        bool decomposable = false;
        for (int b : P) {
            if (b == a) continue;
            int c = rr.diff(a, b);
            if (c >= 0 && pos[c]) { decomposable = true; break; }
        }
        if (!decomposable) base.push_back(a);
    }
    std::sort(base.begin(), base.end(),
              [&](int a, int b) { return lex_greater(rr.elems[a].icoords, rr.elems[b].icoords); });
    return base;
}

namespace {

RBase base_of_positive_set(const RestrictedRootSystem& rr, const std::vector<char>& pos) {
    std::vector<int> P;
    for (size_t e = 0; e < pos.size(); ++e)
        if (pos[e]) P.push_back(static_cast<int>(e));
    RBase base;
    for (int a : P) {
        bool decomposable = false;
        for (int b : P) {
            if (b == a) continue;
            int c = rr.diff(a, b);
            if (c >= 0 && pos[c]) { decomposable = true; break; }
        }
        if (!decomposable) base.push_back(a);
    }
    std::sort(base.begin(), base.end(),
              [&](int a, int b) { return lex_greater(rr.elems[a].icoords, rr.elems[b].icoords); });
    return base;
}

std::vector<char> positives_of_signs(const RestrictedRootSystem& rr,
                                     const std::vector<std::uint64_t>& signs) {
    std::vector<char> pos(rr.elems.size(), 0);
    for (size_t e = 0; e < rr.elems.size(); ++e) {
        int ray = rr.elems[e].ray;
        bool raypos = (signs[ray >> 6] >> (ray & 63)) & 1;
        pos[e] = (rr.elems[e].ray_scale > 0) == raypos;
    }
    return pos;
}

} // namespace

ChamberEnum all_bases(const RestrictedRootSystem& rr, long long budget) {
    ChamberEnum out;
    if (rr.elems.empty()) {
        // Phi^J empty: E^J itself is the unique chamber, base empty
        out.chambers.push_back(Chamber{{}, {}});
        out.visited = 1;
        return out;
    }
    int nrays = static_cast<int>(rr.rays.size());
    int words = (nrays + 63) / 64;
    std::vector<std::uint64_t> start(words, 0);
    for (int r = 0; r < nrays; ++r) start[r >> 6] |= std::uint64_t(1) << (r & 63);

    struct VHash {
        size_t operator()(const std::vector<std::uint64_t>& v) const {
            size_t h = 1469598103934665603ull;
            for (auto x : v) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_map<std::vector<std::uint64_t>, int, VHash> seen;
    std::deque<int> queue;
    seen[start] = 0;
    out.chambers.push_back(Chamber{start, base_of_positive_set(rr, positives_of_signs(rr, start))});
    queue.push_back(0);
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        RBase base = out.chambers[id].base;
        auto signs = out.chambers[id].signs;
        for (int b : base) {
            int ray = rr.elems[b].ray;
            auto nb = signs;
            nb[ray >> 6] ^= std::uint64_t(1) << (ray & 63);
            if (seen.count(nb)) continue;
            if (static_cast<long long>(out.chambers.size()) >= budget) {
                out.complete = false;
                out.visited = static_cast<long long>(out.chambers.size());
                return out;
            }
            int nid = static_cast<int>(out.chambers.size());
            seen[nb] = nid;
            out.chambers.push_back(Chamber{nb, base_of_positive_set(rr, positives_of_signs(rr, nb))});
            queue.push_back(nid);
        }
    }
    out.visited = static_cast<long long>(out.chambers.size());
    return out;
}

RBase standard_base(const RestrictedRootSystem& rr) {
    std::vector<char> pos(rr.elems.size(), 0);
    for (int e : rr.positives) pos[e] = 1;
    return base_of_positive_set(rr, pos);
}

Vec chamber_witness(const RestrictedRootSystem& rr, const RBase& base) {
    if (static_cast<int>(base.size()) != rr.m) throw InvalidInput("base has wrong size");
    Mat M(rr.m, rr.m);
    Vec one(rr.m);
    for (int i = 0; i < rr.m; ++i) {
        one[i] = 1;
        for (int k = 0; k < rr.m; ++k) {
            Rat s = 0;
            for (int l = 0; l < rr.m; ++l) {
                int c = rr.elems[base[i]].icoords[l];
                if (c != 0) s += Rat(c) * rr.gramJ.at(l, k);
            }
            M.at(i, k) = s;
        }
    }
    auto sol = solve_linear(M, one);
    if (sol.kind != SolveOutcome::Unique) throw Error("internal: degenerate base");
    return sol.x;
}

Mat restricted_cartan(const RestrictedRootSystem& rr, const RBase& base) {
    int k = static_cast<int>(base.size());
    Mat c(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            c.at(i, j) = 2 * rr.inner_elems(base[i], base[j]) / rr.inner_elems(base[j], base[j]);
    return c;
}

std::vector<Mat> close_group(const std::vector<Mat>& gens, long long max_order) {
    if (gens.empty()) return {};
    int m = gens[0].rows();
    std::vector<Mat> elems{Mat::identity(m)};
    std::unordered_map<std::string, int> seen{{mat_key(elems[0]), 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        for (const Mat& g : gens) {
            Mat p = g.mul(elems[id]);
            auto key = mat_key(p);
            if (seen.count(key)) continue;
            if (static_cast<long long>(elems.size()) >= max_order) return {};
            seen[key] = static_cast<int>(elems.size());
            elems.push_back(std::move(p));
            queue.push_back(static_cast<int>(elems.size()) - 1);
        }
    }
    return elems;
}

namespace {

std::uint64_t pack_tuple(const std::vector<int>& t) {
    std::uint64_t k = 0;
    for (int x : t) k = (k << 8) | static_cast<std::uint64_t>(x);
    return k;
}

} // namespace

RestrictedWeyl restricted_weyl(const RootSystem& rs, const std::vector<int>& J,
                               long long orbit_budget, long long elem_budget) {
    RestrictedWeyl out;
    std::vector<int> Js = J;
    std::sort(Js.begin(), Js.end());
    RestrictedRootSystem rr = restrict_roots(rs, Js);

    if (Js.empty()) {
        // stabilizer of the empty tuple is all of W
        out.order = rs.weyl_order();
        out.orbit_states = 1;
        for (int s = 0; s < rs.rank; ++s) {
            WeylWord w;
            w.gens.push_back(s);
            out.gens.push_back(weyl_matrix(rs, w));
        }
        if (out.order <= Int(static_cast<long>(elem_budget))) {
            out.elements = close_group(out.gens, elem_budget + 1);
            out.elements_enumerated = !out.elements.empty();
        }
        return out;
    }
    if (static_cast<int>(Js.size()) > 8) throw InvalidInput("|J| > 8 unsupported in tuple packing");

    std::vector<int> t0;
    for (int j : Js) {
        std::vector<int> v(rs.rank, 0);
        v[j] = 1;
        t0.push_back(rs.root_index(v));
    }
    std::sort(t0.begin(), t0.end());

    // orbit BFS of Delta_J as a set (sorted tuples) under the simple
    // reflections; W^J is the setwise stabilizer (Howlett's complement:
    // its elements may permute Delta_J)
    std::vector<std::vector<int>> states{t0};
    std::unordered_map<std::uint64_t, int> seen{{pack_tuple(t0), 0}};
    std::vector<int> parent{-1};
    std::vector<signed char> pgen{-1};
    for (size_t head = 0; head < states.size(); ++head) {
        for (int s = 0; s < rs.rank; ++s) {
            std::vector<int> nt(states[head].size());
            for (size_t i = 0; i < nt.size(); ++i) nt[i] = rs.refl[s][states[head][i]];
            std::sort(nt.begin(), nt.end());
            auto key = pack_tuple(nt);
            if (seen.count(key)) continue;
            if (static_cast<long long>(states.size()) >= orbit_budget)
                throw BudgetExceeded(static_cast<long long>(states.size()),
                                     "tuple orbit exceeds budget");
            seen[key] = static_cast<int>(states.size());
            states.push_back(std::move(nt));
            parent.push_back(static_cast<int>(head));
            pgen.push_back(static_cast<signed char>(s));
        }
    }
    out.orbit_states = static_cast<long long>(states.size());
    Int worder = rs.weyl_order();
    if (worder % Int(static_cast<long>(out.orbit_states)) != 0)
        throw Error("internal: orbit size does not divide |W|");
    out.order = worder / Int(static_cast<long>(out.orbit_states));

    // chain of generators from a state up to the root (applied in order
    // when inverting the transversal, reversed when applying it)
    auto chain = [&](int id) {
        std::vector<int> c;
        while (parent[id] >= 0) {
            c.push_back(pgen[id]);
            id = parent[id];
        }
        return c;
    };
    auto schreier_matrix = [&](int yid, int s, int zid) {
        Mat m(rr.m, rr.m);
        for (int col = 0; col < rr.m; ++col) {
            Vec v = rr.basisJ[col];
            auto cy = chain(yid);
            for (auto it = cy.rbegin(); it != cy.rend(); ++it) v = rs.reflect(*it, v);
            v = rs.reflect(s, v);
            for (int g : chain(zid)) v = rs.reflect(g, v);
            // the image lies in E^J; icoords are its I-components
            for (int i = 0; i < rr.m; ++i) m.at(i, col) = v[rr.I[i]];
            // sanity: the E_J components must agree with the projection
            Vec back(rr.m);
            for (int i = 0; i < rr.m; ++i) back[i] = m.at(i, col);
            if (rr.to_evec(back) != v) throw Error("internal: Schreier image left E^J");
        }
        return m;
    };

    long long target = out.order.fits_slong_p() ? out.order.get_si() : -1;
    std::unordered_map<std::string, int> elem_seen;
    std::vector<Mat> elements{Mat::identity(rr.m)};
    elem_seen[mat_key(elements[0])] = 0;
    bool closed = target == 1;
    for (size_t yid = 0; yid < states.size() && !closed; ++yid) {
        for (int s = 0; s < rs.rank && !closed; ++s) {
            std::vector<int> nt(states[yid].size());
            for (size_t i = 0; i < nt.size(); ++i) nt[i] = rs.refl[s][states[yid][i]];
            std::sort(nt.begin(), nt.end());
            int zid = seen[pack_tuple(nt)];
            if (parent[zid] == static_cast<int>(yid) && pgen[zid] == s) continue; // tree edge
            Mat g = schreier_matrix(static_cast<int>(yid), s, zid);
            auto key = mat_key(g);
            if (elem_seen.count(key)) continue;
            out.gens.push_back(g);
            // re-close the element list under the enlarged generator set
            if (target > 0 && target <= elem_budget) {
                elements = close_group(out.gens, target + 1);
                if (static_cast<long long>(elements.size()) == target) closed = true;
                for (size_t i = 0; i < elements.size(); ++i) elem_seen[mat_key(elements[i])] = 1;
            } else {
                elem_seen[key] = 1;
                if (static_cast<int>(out.gens.size()) >= 64) closed = true; // cap
            }
        }
    }
    if (target > 0 && target <= elem_budget) {
        if (static_cast<long long>(elements.size()) != target)
            throw Error("internal: Schreier generators failed to generate W^J");
        out.elements = std::move(elements);
        out.elements_enumerated = true;
    }
    return out;
}

WeylWord longest_word(const RootSystem& rs, const std::vector<int>& S) {
    WeylWord w;
    if (S.empty()) return w;
    int ns = static_cast<int>(S.size());
    Mat gs(ns, ns);
    Vec one(ns);
    for (int a = 0; a < ns; ++a) {
        one[a] = 1;
        for (int b = 0; b < ns; ++b) gs.at(a, b) = rs.gram.at(S[a], S[b]);
    }
    Vec y = inverse(gs).mul(one); // rho_S in span(Delta_S)
    Vec v(rs.rank);
    for (int a = 0; a < ns; ++a) v[S[a]] = -y[a];
    for (;;) {
        int pick = -1;
        for (int s : S)
            if (rs.inner_simple(v, s) < 0) { pick = s; break; }
        if (pick < 0) break;
        v = rs.reflect(pick, v);
        w.gens.push_back(pick);
    }
    return w;
}

LeviClasses levi_class(const RootSystem& rs, const std::vector<int>& J) {
    std::vector<int> Js = J;
    std::sort(Js.begin(), Js.end());
    auto mask_of = [](const std::vector<int>& v) {
        unsigned m = 0;
        for (int x : v) m |= 1u << x;
        return m;
    };
    LeviClasses out;
    std::unordered_map<unsigned, int> seen;
    out.members.push_back(Js);
    out.witness.push_back(Mat::identity(rs.rank));
    seen[mask_of(Js)] = 0;
    for (size_t head = 0; head < out.members.size(); ++head) {
        auto K = out.members[head];
        Mat wk = out.witness[head];
        for (int a = 0; a < rs.rank; ++a) {
            if (std::find(K.begin(), K.end(), a) != K.end()) continue;
            auto M = K;
            M.push_back(a);
            std::sort(M.begin(), M.end());
            WeylWord word = longest_word(rs, K);
            WeylWord wm = longest_word(rs, M);
            word.gens.insert(word.gens.end(), wm.gens.begin(), wm.gens.end());
            // v = w0(M) w0(K) maps Delta_K to a subset of Delta_M
            std::vector<int> Kp;
            Mat v(rs.rank, rs.rank);
            bool ok = true;
            for (int col = 0; col < rs.rank; ++col) {
                Vec e(rs.rank);
                e[col] = 1;
                Vec img = apply_word(rs, word, e);
                for (int i = 0; i < rs.rank; ++i) v.at(i, col) = img[i];
            }
            for (int k : K) {
                int image = -1;
                for (int i = 0; i < rs.rank; ++i) {
                    if (v.at(i, k) == 1) {
                        bool unit = true;
                        for (int l = 0; l < rs.rank; ++l)
                            if (l != i && v.at(l, k) != 0) unit = false;
                        if (unit) { image = i; break; }
                    }
                }
                if (image < 0) { ok = false; break; }
                Kp.push_back(image);
            }
            if (!ok) throw Error("internal: elementary conjugation left the simple roots");
            std::sort(Kp.begin(), Kp.end());
            unsigned km = mask_of(Kp);
            if (seen.count(km)) continue;
            seen[km] = static_cast<int>(out.members.size());
            out.members.push_back(Kp);
            out.witness.push_back(wk.mul(inverse(v)));
        }
    }
    return out;
}

} // namespace ggp
