#ifndef GGP_IO_HPP
#define GGP_IO_HPP

// Serialization surface: versioned JSON result documents (exact fraction
// strings only), Graphviz DOT for adjacency graphs, SVG for 2-dimensional
// polytopes, and the CLI job plumbing (node-order permutations, config
// files, atomic writes).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggp/grading.hpp"
#include "ggp/pyramids.hpp"
#include "ggp/tables.hpp"

namespace ggp {

using Json = nlohmann::ordered_json;

struct JobSpec {
    std::string mode;                 // restrict | arrange | grading | pyramid | tables | render
    std::string type;                 // "E7", "G2", ... or "sl" | "sp" | "so"
    int rank = 0;                     // derived from type string when numeric suffix present
    std::vector<int> order;           // user labels along the canonical diagram positions
    std::vector<int> J;               // user labels (1-based in user space)
    std::vector<int> labels;          // aligned with J
    std::vector<int> partition;
    bool integral = false;
    bool graph = false;
    long long budget = 10000000;      // BFS state budget
    unsigned long seed = 0;
    std::string json_out, dot_out, svg_out;
};

/// Node relabeling between user labels and Bourbaki indices.
/// --order lists the user labels along the canonical diagram positions
/// (rows first, then the branch node for D/E types).
struct NodeOrder {
    std::vector<int> user_to_bourbaki; // [user label - 1] -> 0-based index
    std::vector<int> bourbaki_to_user; // inverse

    int to_bourbaki(int user_label) const;
    int to_user(int bourbaki_index) const;
};

std::vector<int> canonical_positions(Lie type, int rank); // 0-based Bourbaki order
NodeOrder make_order(Lie type, int rank, const std::vector<int>& order_flag);

/// Flat key=value config file mirroring the CLI flags.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

Json rat_json(const Rat& q);          // exact fraction string
Json vec_json(const Vec& v);

Json job_json(const JobSpec& job);

/// Writes text to path via a temp file + rename; "-" or "" means stdout.
void write_atomic(const std::string& path, const std::string& text);

/// DOT for an adjacency graph: node labels are comma-joined characteristic
/// strings in user node order, the Dynkin node carries style=bold.
std::string dot_graph(const std::vector<Characteristic>& labels,
                      const std::vector<std::pair<int, int>>& edges, int bold_node,
                      const NodeOrder& order);
std::string dot_graph_plain(const std::vector<Characteristic>& labels,
                            const std::vector<std::pair<int, int>>& edges, int bold_node);

/// SVG of a 2-dimensional good grading polytope: boundary, the affine
/// hyperplanes H_{alpha,k} meeting the closure, marked points.
/// Throws InvalidInput unless dim E_e = 2.
std::string polytope_svg(const RestrictedRootSystem& rr, const GoodGradingPolytope& poly,
                         const std::vector<Vec>& marked);

/// Same for the classical pipeline (sp/so with m = 2, sl with 3 parts).
std::string classical_polytope_svg(const ClassicalNilpotent& cn, const std::vector<Vec>& marked);

} // namespace ggp

#endif
