#include "ggp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ggp {

int NodeOrder::to_bourbaki(int user_label) const {
    if (user_label < 1 || user_label > static_cast<int>(user_to_bourbaki.size()))
        throw InvalidInput("node label " + std::to_string(user_label) + " out of range");
    return user_to_bourbaki[user_label - 1];
}

int NodeOrder::to_user(int bourbaki_index) const { return bourbaki_to_user[bourbaki_index]; }

std::vector<int> canonical_positions(Lie type, int rank) {
    std::vector<int> pos;
    if (type == Lie::E) {
        pos.push_back(0);
        for (int i = 2; i < rank; ++i) pos.push_back(i);
        pos.push_back(1); // the branch node comes last
    } else {
        for (int i = 0; i < rank; ++i) pos.push_back(i);
    }
    return pos;
}

NodeOrder make_order(Lie type, int rank, const std::vector<int>& order_flag) {
    NodeOrder no;
    no.user_to_bourbaki.assign(rank, -1);
    no.bourbaki_to_user.assign(rank, -1);
    auto canon = canonical_positions(type, rank);
    std::vector<int> order = order_flag;
    if (order.empty())
        for (int i = 1; i <= rank; ++i) order.push_back(i); // identity labeling
    if (static_cast<int>(order.size()) != rank) throw InvalidInput("--order needs one label per node");
    for (int k = 0; k < rank; ++k) {
        int user = order[k];
        if (user < 1 || user > rank || no.user_to_bourbaki[user - 1] >= 0)
            throw InvalidInput("--order must be a permutation of 1..rank");
        no.user_to_bourbaki[user - 1] = canon[k];
        no.bourbaki_to_user[canon[k]] = user;
    }
    return no;
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config file " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) out.emplace_back(key, val);
    }
    return out;
}

Json rat_json(const Rat& q) { return Json(to_string(q)); }

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(rat_json(v[i]));
    return a;
}

Json job_json(const JobSpec& job) {
    Json j;
    j["mode"] = job.mode;
    j["type"] = job.type;
    if (!job.order.empty()) j["order"] = job.order;
    if (!job.J.empty() || job.mode == "restrict" || job.mode == "arrange") j["J"] = job.J;
    if (!job.labels.empty()) j["labels"] = job.labels;
    if (!job.partition.empty()) j["partition"] = job.partition;
    j["integral"] = job.integral;
    j["graph"] = job.graph;
    j["budget"] = job.budget;
    j["seed"] = job.seed;
    return j;
}

void write_atomic(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write to " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InvalidInput("cannot move output into place at " + path);
}

namespace {

std::string char_label(const Characteristic& c, const NodeOrder* order) {
    std::string s;
    int r = static_cast<int>(c.labels.size());
    for (int user = 1; user <= r; ++user) {
        int idx = order ? order->to_bourbaki(user) : user - 1;
        if (user > 1) s += ",";
        s += to_string(c.labels[idx]);
    }
    return s;
}

std::string dot_impl(const std::vector<Characteristic>& labels,
                     const std::vector<std::pair<int, int>>& edges, int bold_node,
                     const NodeOrder* order) {
    std::ostringstream out;
    out << "graph adjacency {\n";
    out << "  node [shape=box];\n";
    for (size_t i = 0; i < labels.size(); ++i) {
        out << "  n" << i << " [label=\"" << char_label(labels[i], order) << "\"";
        if (static_cast<int>(i) == bold_node) out << " style=bold dynkin=true";
        out << "];\n";
    }
    for (auto [a, b] : edges) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

std::string dot_graph(const std::vector<Characteristic>& labels,
                      const std::vector<std::pair<int, int>>& edges, int bold_node,
                      const NodeOrder& order) {
    return dot_impl(labels, edges, bold_node, &order);
}

std::string dot_graph_plain(const std::vector<Characteristic>& labels,
                            const std::vector<std::pair<int, int>>& edges, int bold_node) {
    return dot_impl(labels, edges, bold_node, nullptr);
}

namespace {

// 2D scene assembled exactly in some rational coordinate system, embedded
// into the plane only at print time
struct Scene2D {
    // constraints |f . x| < b describing the polytope
    std::vector<std::pair<Vec, Rat>> bounds;
    // integer-line families: every alpha in Phi_e^+ contributes the lines
    // f_alpha . x = k for integers k meeting the closure
    std::vector<std::pair<Vec, Rat>> families;
    std::vector<Vec> marked;
    // Gram matrix of the coordinate system (for a faithful embedding)
    Mat gram;
};

struct Pt {
    double x, y;
};

std::string svg_of_scene(const Scene2D& sc) {
    // Cholesky embedding of the Gram matrix
    double g11 = sc.gram.at(0, 0).get_d();
    double g12 = sc.gram.at(0, 1).get_d();
    double g22 = sc.gram.at(1, 1).get_d();
    double a = std::sqrt(g11);
    double b = g12 / a;
    double c = std::sqrt(std::max(1e-12, g22 - b * b));
    auto embed = [&](const Vec& v) {
        double x = v[0].get_d(), y = v[1].get_d();
        return Pt{a * x + b * y, c * y};
    };

    // polytope vertices: pairwise intersections of boundary lines kept
    // inside the closure
    std::vector<Vec> verts;
    auto inside = [&](const Vec& x) {
        for (auto& [f, bd] : sc.bounds) {
            Rat v = dot(f, x);
            if (v > bd || -v > bd) return false;
        }
        return true;
    };
    int nb = static_cast<int>(sc.bounds.size());
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j)
            for (int si : {-1, 1})
                for (int sj : {-1, 1}) {
                    Mat m(2, 2);
                    Vec rhs(2);
                    for (int k = 0; k < 2; ++k) {
                        m.at(0, k) = sc.bounds[i].first[k];
                        m.at(1, k) = sc.bounds[j].first[k];
                    }
                    rhs[0] = Rat(si) * sc.bounds[i].second;
                    rhs[1] = Rat(sj) * sc.bounds[j].second;
                    auto sol = solve_linear(m, rhs);
                    if (sol.kind != SolveOutcome::Unique) continue;
                    if (!inside(sol.x)) continue;
                    if (std::find(verts.begin(), verts.end(), sol.x) == verts.end())
                        verts.push_back(sol.x);
                }
    // order boundary vertices by angle
    std::sort(verts.begin(), verts.end(), [&](const Vec& u, const Vec& v) {
        Pt pu = embed(u), pv = embed(v);
        return std::atan2(pu.y, pu.x) < std::atan2(pv.y, pv.x);
    });

    // clipped integer lines
    struct Seg {
        Vec p, q;
    };
    std::vector<Seg> segs;
    for (auto& [f, bd] : sc.families) {
        Int kmax = floor_int(bd);
        for (Int k = -kmax; k <= kmax; ++k) {
            // line f.x = k, direction d with f.d = 0
            Vec d(2);
            d[0] = -f[1];
            d[1] = f[0];
            Vec p0(2);
            if (f[0] != 0) {
                p0[0] = Rat(k) / f[0];
            } else {
                p0[1] = Rat(k) / f[1];
            }
            // t-interval from every bound
            bool empty = false;
            bool have = false;
            Rat t0, t1;
            for (auto& [g, gb] : sc.bounds) {
                Rat gd = dot(g, d);
                Rat gp = dot(g, p0);
                if (gd == 0) {
                    if (gp > gb || -gp > gb) { empty = true; break; }
                    continue;
                }
                Rat lo = (-gb - gp) / gd, hi = (gb - gp) / gd;
                if (lo > hi) std::swap(lo, hi);
                if (!have) {
                    t0 = lo;
                    t1 = hi;
                    have = true;
                } else {
                    if (lo > t0) t0 = lo;
                    if (hi < t1) t1 = hi;
                }
                if (t0 > t1) { empty = true; break; }
            }
            if (empty || !have || t0 >= t1) continue;
            Vec pa = p0, pb = p0;
            Vec da = d, db = d;
            da *= t0;
            db *= t1;
            pa += da;
            pb += db;
            segs.push_back({pa, pb});
        }
    }

    // bounding box over everything
    double minx = -1, maxx = 1, miny = -1, maxy = 1;
    auto grow = [&](const Pt& p) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (const Vec& v : verts) grow(embed(v));
    const double W = 480, H = 480, pad = 20;
    double sx = (W - 2 * pad) / std::max(1e-9, maxx - minx);
    double sy = (H - 2 * pad) / std::max(1e-9, maxy - miny);
    double s = std::min(sx, sy);
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };
    auto px = [&](const Pt& p) { return fmt(pad + s * (p.x - minx)); };
    auto py = [&](const Pt& p) { return fmt(H - pad - s * (p.y - miny)); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    for (const Seg& sg : segs) {
        Pt p = embed(sg.p), q = embed(sg.q);
        svg << "  <line x1=\"" << px(p) << "\" y1=\"" << py(p) << "\" x2=\"" << px(q)
            << "\" y2=\"" << py(q) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    if (!verts.empty()) {
        svg << "  <polygon points=\"";
        for (size_t i = 0; i < verts.size(); ++i) {
            Pt p = embed(verts[i]);
            if (i) svg << " ";
            svg << px(p) << "," << py(p);
        }
        svg << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    for (const Vec& v : sc.marked) {
        Pt p = embed(v);
        svg << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p)
            << "\" r=\"4\" fill=\"#000000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace

std::string polytope_svg(const RestrictedRootSystem& rr, const GoodGradingPolytope& poly,
                         const std::vector<Vec>& marked) {
    if (rr.m != 2) throw InvalidInput("SVG rendering needs dim E_e = 2");
    Scene2D sc;
    sc.gram = rr.gramJ;
    for (const auto& rb : poly.ray_bounds) {
        Vec f(2);
        for (int k = 0; k < 2; ++k) {
            Rat s = 0;
            for (int l = 0; l < 2; ++l)
                if (rr.rays[rb.ray].primitive[l] != 0)
                    s += Rat(rr.rays[rb.ray].primitive[l]) * rr.gramJ.at(l, k);
            f[k] = s;
        }
        sc.bounds.emplace_back(f, rb.bound);
    }
    for (auto& [e, d] : poly.pairs) {
        Vec f(2);
        for (int k = 0; k < 2; ++k) {
            Rat s = 0;
            for (int l = 0; l < 2; ++l)
                if (rr.elems[e].icoords[l] != 0)
                    s += Rat(rr.elems[e].icoords[l]) * rr.gramJ.at(l, k);
            f[k] = s;
        }
        sc.families.emplace_back(f, Rat(d));
    }
    sc.marked = marked;
    return svg_of_scene(sc);
}

std::string classical_polytope_svg(const ClassicalNilpotent& cn, const std::vector<Vec>& marked) {
    // subspace basis (identity for sp/so, kernel of the trace for sl)
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
    if (B.size() != 2) throw InvalidInput("SVG rendering needs dim E_e = 2");
    // inner product on eps coordinates
    auto axis_norm = [&](int k) {
        const std::vector<int>& lbar = cn.type == Classical::sl ? cn.lam.parts : cn.pyr.lbar;
        return cn.type == Classical::sl ? rat(1, lbar[k]) : rat(1, 2 * lbar[k]);
    };
    Scene2D sc;
    sc.gram = Mat(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rat s = 0;
            for (int k = 0; k < cn.m; ++k) s += B[i][k] * B[j][k] * axis_norm(k);
            sc.gram.at(i, j) = s;
        }
    for (const auto& r : cn.phi_pos) {
        Vec f(2);
        for (int i = 0; i < 2; ++i) {
            Rat s = 0;
            for (int k = 0; k < cn.m; ++k)
                if (r.eps[k] != 0) s += Rat(r.eps[k]) * B[static_cast<size_t>(i)][k];
            f[i] = s;
        }
        sc.families.emplace_back(f, Rat(r.d));
        sc.bounds.emplace_back(f, Rat(r.d));
    }
    // marked points arrive in eps coordinates; convert to subspace coords
    Mat bt(cn.m, 2);
    for (int i = 0; i < cn.m; ++i)
        for (int j = 0; j < 2; ++j) bt.at(i, j) = B[static_cast<size_t>(j)][i];
    for (const Vec& p : marked) {
        auto sol = solve_linear(bt, p);
        if (sol.kind != SolveOutcome::Unique) throw Error("internal: marked point outside E_e");
        sc.marked.push_back(sol.x);
    }
    return svg_of_scene(sc);
}

} // namespace ggp
