// Command-line surface: restricted root systems, arrangement analytics,
// good gradings, classical pyramids, table reproduction and SVG/DOT
// rendering, with exact-fraction JSON output throughout.

#include <CLI11.hpp>

#include <iostream>

#include "ggp/arrange.hpp"
#include "ggp/io.hpp"

using namespace ggp;

namespace {

struct ParsedType {
    bool classical = false;
    Classical ctype = Classical::sl;
    Lie type = Lie::A;
    int rank = 0;
};

ParsedType parse_type(const std::string& spec, int rank_flag) {
    ParsedType out;
    if (spec == "sl" || spec == "sp" || spec == "so") {
        out.classical = true;
        out.ctype = classical_from_string(spec);
        return out;
    }
    if (spec.empty()) throw InvalidInput("--type is required");
    out.type = lie_from_char(spec[0]);
    if (spec.size() > 1)
        out.rank = std::stoi(spec.substr(1));
    else
        out.rank = rank_flag;
    if (out.rank <= 0) throw InvalidInput("rank missing: use --type E7 or --type E --rank 7");
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

Json mult_json(const RestrictedRootSystem& rr, const Sl2Decomposition& dec) {
    Json arr = Json::array();
    for (int e : rr.positives) {
        Json row;
        row["icoords"] = rr.elems[e].icoords;
        Json seq = Json::array();
        for (auto& [i, m] : dec.mult[e])
            for (long k = 0; k < m; ++k) seq.push_back(i);
        row["sl2_sequence"] = seq;
        row["d"] = dec.d[e];
        row["circ"] = dec.circ[e] != 0;
        arr.push_back(row);
    }
    return arr;
}

Json characteristic_json(const Characteristic& c, const NodeOrder& order) {
    Json arr = Json::array();
    for (int user = 1; user <= static_cast<int>(c.labels.size()); ++user)
        arr.push_back(rat_json(c.labels[order.to_bourbaki(user)]));
    return arr;
}

int run_job(JobSpec job) {
    Json doc;
    doc["version"] = "1";
    doc["job"] = job_json(job);
    Json result;
    Json provenance;
    provenance["budget_exceeded"] = false;
    provenance["fallbacks"] = Json::array();
    int exit_code = 0;
    std::string dot_text, svg_text;

    if (job.mode == "tables") {
        ParsedType pt = parse_type(job.type, job.rank);
        if (pt.classical) throw InvalidInput("tables mode needs an exceptional type");
        TablesReport rep = tables_report(pt.type, pt.rank, job.budget, job.budget);
        Json rows = Json::array();
        for (const auto& r : rep.rows) {
            Json row;
            row["name"] = r.name;
            if (!r.skip_reason.empty()) {
                row["skipped"] = r.skip_reason;
            } else {
                row["hyperplanes"] = r.hyperplanes;
                row["chambers"] = r.chambers;
                row["weyl_order"] = r.weyl_order;
                row["levi_classes"] = r.classes;
                row["h"] = r.h;
                row["exponents"] = r.exps;
                row["weyl_path"] = r.weyl_path;
                row["pass"] = r.pass;
                if (!r.pass) row["mismatch"] = r.mismatch;
            }
            rows.push_back(row);
        }
        result["rows"] = rows;
        result["pass"] = rep.pass;
        result["fail"] = rep.fail;
        result["skipped"] = rep.skipped;
        if (rep.skipped) provenance["fallbacks"].push_back("rows beyond desk scale skipped");
    } else if (job.mode == "pyramid" || (job.mode == "render" && !job.partition.empty())) {
        ParsedType pt = parse_type(job.type, job.rank);
        if (!pt.classical) throw InvalidInput("pyramid mode needs --type sl|sp|so");
        Partition lam(job.partition);
        ClassicalNilpotent cn = restricted_data(pt.ctype, lam);
        Json pyr = Json::array();
        for (const Box& b : cn.pyr.boxes) {
            Json box;
            box["id"] = b.id;
            box["row"] = b.row;
            box["col"] = b.col;
            box["skew"] = b.skew;
            pyr.push_back(box);
        }
        result["pyramid"] = pyr;
        Json em = Json::array();
        for (auto& [ij, v] : cn.e.entries) {
            Json t;
            t["i"] = ij.first;
            t["j"] = ij.second;
            t["c"] = rat_json(v);
            em.push_back(t);
        }
        result["e"] = em;
        Json hm = Json::array();
        for (auto& [ij, v] : cn.h.entries)
            if (v != 0) {
                Json t;
                t["i"] = ij.first;
                t["c"] = rat_json(v);
                hm.push_back(t);
            }
        result["h"] = hm;
        Json roots = Json::array();
        for (const auto& r : cn.phi_pos) {
            Json rr;
            rr["eps"] = r.eps;
            rr["d"] = r.d;
            roots.push_back(rr);
        }
        result["phi_e_positive"] = roots;
        result["jordan_type"] = jordan_type(cn);
        std::vector<Vec> pts;
        if (job.integral || job.graph || job.mode == "render") {
            pts = classical_integral_points(cn);
            Json jp = Json::array();
            for (const Vec& p : pts) {
                Json e;
                e["p"] = vec_json(p);
                Json lbl = Json::array();
                for (const Rat& c : classical_characteristic(cn, p).labels)
                    lbl.push_back(rat_json(c));
                e["characteristic"] = lbl;
                jp.push_back(e);
            }
            result["integral_points"] = jp;
        }
        if (job.graph) {
            ClassicalGraph g = classical_adjacency_graph(cn);
            Json nodes = Json::array();
            for (size_t i = 0; i < g.reps.size(); ++i) {
                Json n;
                n["p"] = vec_json(g.reps[i]);
                Json lbl = Json::array();
                for (const Rat& c : g.labels[i].labels) lbl.push_back(rat_json(c));
                n["characteristic"] = lbl;
                nodes.push_back(n);
            }
            result["classes"] = nodes;
            result["edges"] = g.edges;
            result["dynkin_node"] = g.dynkin_node;
            dot_text = dot_graph_plain(g.labels, g.edges, g.dynkin_node);
        }
        if (!job.svg_out.empty() || job.mode == "render")
            svg_text = classical_polytope_svg(cn, pts);
    } else if (job.mode == "restrict" || job.mode == "arrange" || job.mode == "grading" ||
               job.mode == "render") {
        ParsedType pt = parse_type(job.type, job.rank);
        if (pt.classical) throw InvalidInput(job.mode + " mode needs an exceptional/ambient type");
        RootSystem rs = build_root_system(pt.type, pt.rank);
        NodeOrder order = make_order(pt.type, pt.rank, job.order);
        std::vector<int> J;
        for (int u : job.J) J.push_back(order.to_bourbaki(u));
        std::sort(J.begin(), J.end());
        RestrictedRootSystem rr = restrict_roots(rs, J);
        result["levi_type"] = levi_type_name(rs, J);
        result["restricted_rank"] = rr.m;
        result["hyperplanes"] = static_cast<int>(rr.rays.size());
        Json pos = Json::array();
        for (int e : rr.positives) pos.push_back(rr.elems[e].icoords);
        result["positive_restricted_roots"] = pos;

        if (job.mode == "restrict" || job.mode == "arrange") {
            RBase base = standard_base(rr);
            Json cart = Json::array();
            Mat cm = restricted_cartan(rr, base);
            for (int i = 0; i < cm.rows(); ++i) {
                Json row = Json::array();
                for (int j = 0; j < cm.cols(); ++j) row.push_back(rat_json(cm.at(i, j)));
                cart.push_back(row);
            }
            result["restricted_cartan"] = cart;
            if (rr.theta >= 0) result["theta_restricted"] = rr.elems[rr.theta].icoords;

            auto ce = all_bases(rr, job.budget);
            if (!ce.complete) {
                provenance["budget_exceeded"] = true;
                result["chambers_partial"] = ce.visited;
                exit_code = 2;
            } else {
                result["chambers"] = static_cast<long long>(ce.chambers.size());
                LeviClasses kj = levi_class(rs, J);
                result["kJ"] = static_cast<int>(kj.members.size());
                long long predicted = static_cast<long long>(ce.chambers.size()) /
                                      static_cast<long long>(kj.members.size());
                Int orbit = rs.weyl_order() / Int(static_cast<long>(predicted));
                if (orbit <= Int(static_cast<long>(job.budget))) {
                    RestrictedWeyl rw = restricted_weyl(rs, J, job.budget, 4096);
                    result["wJ"] = rw.order.get_si();
                    result["wJ_path"] = "schreier";
                    result["wJ_orbit_states"] = rw.orbit_states;
                } else {
                    result["wJ"] = predicted;
                    result["wJ_path"] = "orlik-solomon";
                    provenance["fallbacks"].push_back("W^J via |C^J|/|K_J|");
                }
                CoxeterH ch = coxeter_h(rs, kj);
                result["hJ"] = ch.h;
                Json ak = Json::array();
                for (int k : ch.achieving_K) ak.push_back(order.to_user(k));
                result["hJ_achieving_K"] = ak;
                auto cp = char_poly(arrangement_of(rr));
                Json cpj = Json::array();
                for (const Int& c : cp) cpj.push_back(c.get_str());
                result["char_poly"] = cpj;
                result["exponents"] = exponents(cp);
                auto rep = sommers_check(rs, ch.h, exponents(cp));
                result["sommers_candidates"] = rep.candidates;
            }
        }

        if (job.mode == "grading" || job.mode == "render") {
            if (job.labels.size() != J.size())
                throw InvalidInput("grading mode needs --labels matching --J");
            NilpotentDatum nd;
            nd.J = J;
            // labels arrive ordered like the user J list; realign to sorted J
            {
                std::vector<std::pair<int, int>> pairs;
                for (size_t i = 0; i < job.J.size(); ++i)
                    pairs.emplace_back(order.to_bourbaki(job.J[i]), job.labels[i]);
                std::sort(pairs.begin(), pairs.end());
                nd.labels.clear();
                for (auto& [j, l] : pairs) nd.labels.push_back(l);
            }
            Vec h = solve_h(rs, nd);
            Json diagram = Json::array();
            for (int user = 1; user <= rs.rank; ++user)
                diagram.push_back(rat_json(rs.inner_simple(h, order.to_bourbaki(user))));
            result["h_diagram"] = diagram;
            Sl2Decomposition dec = sl2_multiplicities(rr, h);
            result["multiplicities"] = mult_json(rr, dec);
            GoodGradingPolytope poly = polytope(rr, dec);
            Json bounds = Json::array();
            for (const auto& rb : poly.ray_bounds) {
                Json b;
                b["direction"] = rr.rays[rb.ray].primitive;
                b["bound"] = rat_json(rb.bound);
                bounds.push_back(b);
            }
            result["polytope"] = bounds;
            Json irr = Json::array();
            for (const auto& rb : poly.irredundant) {
                Json b;
                b["direction"] = rr.rays[rb.ray].primitive;
                b["bound"] = rat_json(rb.bound);
                irr.push_back(b);
            }
            result["polytope_irredundant"] = irr;

            std::vector<Vec> pts;
            std::vector<Mat> we;
            if (job.integral || job.graph || job.mode == "render") {
                pts = integral_points(poly);
                RestrictedWeyl rw = restricted_weyl(rs, J, job.budget, 200000);
                if (!rw.elements_enumerated)
                    throw BudgetExceeded(rw.orbit_states, "W_e too large to enumerate");
                we = rw.elements;
                Json jp = Json::array();
                for (const Vec& p : pts) {
                    Json e;
                    e["p"] = vec_json(p);
                    e["characteristic"] =
                        characteristic_json(characteristic(rs, h, rr.to_evec(p)), order);
                    jp.push_back(e);
                }
                result["integral_points"] = jp;
                ComponentData cd = component_data(rr, dec, we);
                Json dc = Json::array();
                for (int b : cd.delta_circ) dc.push_back(rr.elems[b].icoords);
                result["delta_circ"] = dc;
                result["w_circ_order"] = static_cast<long long>(cd.w_circ.size());
                result["z_e_order"] = static_cast<long long>(cd.z_e.size());
                result["w_e_order"] = static_cast<long long>(we.size());
            }
            if (job.graph) {
                AdjacencyGraph g = adjacency_graph(rs, rr, dec, poly, we);
                Json nodes = Json::array();
                for (size_t i = 0; i < g.reps.size(); ++i) {
                    Json n;
                    n["p"] = vec_json(g.reps[i]);
                    n["characteristic"] = characteristic_json(g.labels[i], order);
                    nodes.push_back(n);
                }
                result["classes"] = nodes;
                result["edges"] = g.edges;
                result["dynkin_node"] = g.dynkin_node;
                dot_text = dot_graph(g.labels, g.edges, g.dynkin_node, order);
            }
            if (!job.svg_out.empty() || job.mode == "render")
                svg_text = polytope_svg(rr, poly, pts);
        }
    } else {
        throw InvalidInput("unknown mode " + job.mode);
    }

    doc["result"] = result;
    doc["provenance"] = provenance;
    write_atomic(job.json_out, doc.dump(2) + "\n");
    if (!job.dot_out.empty()) {
        if (dot_text.empty()) throw InvalidInput("--dot needs --graph");
        write_atomic(job.dot_out, dot_text);
    }
    if (!job.svg_out.empty()) {
        if (svg_text.empty()) throw InvalidInput("--svg needs a 2-dimensional polytope mode");
        write_atomic(job.svg_out, svg_text);
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with restricted root systems and good grading polytopes"};
    app.require_subcommand(1);

    JobSpec job;
    std::string config_path, J_csv, labels_csv, order_csv, partition_csv;
    int rank_flag = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", job.type, "root system (E7, G2, ...) or sl|sp|so");
        sub->add_option("--rank", rank_flag, "rank when --type is a bare letter");
        sub->add_option("--order", order_csv, "user node labels along the canonical diagram");
        sub->add_option("--J", J_csv, "subset J as node labels (may be empty)");
        sub->add_option("--labels", labels_csv, "labels on J (0 or 2 each)");
        sub->add_option("--partition", partition_csv, "partition for sl|sp|so");
        sub->add_flag("--integral", job.integral, "enumerate integral good gradings");
        sub->add_flag("--graph", job.graph, "build the adjacency graph");
        sub->add_option("--budget", job.budget, "BFS state budget");
        sub->add_option("--seed", job.seed, "seed echoed into the document");
        sub->add_option("--json", job.json_out, "JSON output path (default stdout)");
        sub->add_option("--dot", job.dot_out, "DOT output path");
        sub->add_option("--svg", job.svg_out, "SVG output path");
        sub->add_option("--config", config_path, "key=value config file (flags win)");
    };
    for (const char* mode : {"restrict", "arrange", "grading", "pyramid", "tables", "render"})
        add_common(app.add_subcommand(mode, mode));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        job.mode = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) {
            for (auto& [key, val] : read_config(config_path)) {
                // CLI flags win: only fill still-empty values
                if (key == "type" && job.type.empty()) job.type = val;
                else if (key == "rank" && rank_flag == 0) rank_flag = std::stoi(val);
                else if (key == "order" && order_csv.empty()) order_csv = val;
                else if (key == "J" && J_csv.empty()) J_csv = val;
                else if (key == "labels" && labels_csv.empty()) labels_csv = val;
                else if (key == "partition" && partition_csv.empty()) partition_csv = val;
                else if (key == "budget") job.budget = std::stoll(val);
                else if (key == "seed") job.seed = std::stoul(val);
                else if (key == "json" && job.json_out.empty()) job.json_out = val;
                else if (key == "dot" && job.dot_out.empty()) job.dot_out = val;
                else if (key == "svg" && job.svg_out.empty()) job.svg_out = val;
                else if (key == "integral") job.integral = val == "true" || val == "1";
                else if (key == "graph") job.graph = val == "true" || val == "1";
            }
        }
        job.rank = rank_flag;
        job.order = parse_ints(order_csv);
        job.J = parse_ints(J_csv);
        job.labels = parse_ints(labels_csv);
        job.partition = parse_ints(partition_csv);
        if (job.budget <= 0) throw InvalidInput("--budget must be positive");
        return run_job(job);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (" << e.visited << " states)\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
