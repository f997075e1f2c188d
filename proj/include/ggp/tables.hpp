#ifndef GGP_TABLES_HPP
#define GGP_TABLES_HPP

// Bundled fixture rows for the exceptional restricted-root-system tables
// and the integral adjacency graphs, plus the machinery that recomputes
// and compares them.

#include <optional>
#include <string>
#include <vector>

#include "ggp/arrange.hpp"
#include "ggp/grading.hpp"

namespace ggp {

struct TableRow {
    std::string name;
    int hyperplanes = 0;
    long long chambers = 0;
    long long weyl_order = 0;
    int classes = 0; // |K_J|
    int h = 0;
    std::vector<int> exps;
};

std::vector<TableRow> fixture_rows(Lie type, int rank);

/// Subsets of the simple roots up to W-conjugacy, with display names
/// (component types; tilde for all-short components in F4/G2; primes in
/// E7 assigned by descending hyperplane count).
struct LeviClassInfo {
    std::string name;
    std::vector<int> rep; // canonical representative subset
    int class_size = 0;
};

std::vector<LeviClassInfo> enumerate_levi_classes(const RootSystem& rs);

/// Name of the sub-diagram type of K (no primes).
std::string levi_type_name(const RootSystem& rs, const std::vector<int>& K);

struct ComputedRow {
    std::string name;
    std::vector<int> J;
    bool computed = false;
    std::string skip_reason;
    int hyperplanes = 0;
    long long chambers = 0;
    long long weyl_order = 0;
    int classes = 0;
    int h = 0;
    std::vector<int> exps;
    std::string weyl_path; // "schreier" or "orlik-solomon"
    bool pass = false;
    std::string mismatch;
};

struct TablesReport {
    std::vector<ComputedRow> rows;
    int pass = 0, fail = 0, skipped = 0;
};

/// Recompute every fixture row within the budgets and compare. Rows whose
/// fixture chamber count exceeds chamber_budget are reported as skipped.
TablesReport tables_report(Lie type, int rank, long long chamber_budget, long long orbit_budget);

/// Adjacency-graph fixtures (integral good gradings, E6 and E7 blocks).
struct AdjacencyFixture {
    Lie type;
    int rank;
    std::string block;           // display name of the nilpotent
    std::string levi;            // class name of the minimal Levi
    int decoration;              // 0 = principal (all labels 2), 1 = next by orbit dim, ...
    std::vector<std::vector<int>> nodes; // characteristics, Bourbaki order
    std::vector<std::pair<int, int>> edges;
    int bold = -1; // Dynkin node index
};

std::vector<AdjacencyFixture> adjacency_fixtures();

/// Resolve the (J, labels) datum of a fixture: representative of the
/// named Levi class, label vector of the given decoration (distinguished
/// vectors ordered by descending orbit dimension in the Levi).
NilpotentDatum resolve_fixture_datum(const RootSystem& rs, const AdjacencyFixture& fx);

struct GraphCheck {
    bool pass = false;
    std::string mismatch;
};

/// Compare a computed adjacency graph against a fixture block (node
/// characteristics, edges under the characteristic matching, bold node).
GraphCheck check_adjacency_fixture(const RootSystem& rs, const AdjacencyFixture& fx);

} // namespace ggp

#endif
