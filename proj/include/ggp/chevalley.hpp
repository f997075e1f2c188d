#ifndef GGP_CHEVALLEY_HPP
#define GGP_CHEVALLEY_HPP

// Chevalley structure constants N_{a,b} with signs fixed by the
// extraspecial-pair convention, and the direct good-grading oracle that
// verifies the defining injectivity/surjectivity conditions of ad e by
// exact rank computations.

#include <map>
#include <unordered_map>
#include <vector>

#include "ggp/exact.hpp"
#include "ggp/rootsys.hpp"

namespace ggp {

struct ChevalleyData {
    const RootSystem* rs;
    // N keyed by a * num_roots + b for root indices a, b with a+b a root
    std::unordered_map<long long, int> table;

    /// N_{a,b}; zero when root(a) + root(b) is not a root.
    int N(int a, int b) const;

    /// h_alpha = alpha^vee expressed in the simple-coroot basis.
    Vec coroot(int root) const;
};

ChevalleyData build_chevalley(const RootSystem& rs);

/// Basis bookkeeping for g: root vectors first (same order as rs.roots),
/// then the simple coroots h_1..h_r.
inline int chev_dim(const RootSystem& rs) { return static_cast<int>(rs.roots.size()) + rs.rank; }

/// Bracket of two basis elements as a sparse coefficient vector.
std::vector<std::pair<int, Rat>> bracket_basis(const ChevalleyData& cd, int a, int b);

struct GradingCheck {
    bool good = false;
    bool e_in_degree_2 = true;
    // dims of the graded pieces, keyed by exact degree
    std::map<Rat, int> degree_dim;
    // dim of the centralizer g_e = dim g - rank(ad e)
    int dim_centralizer = 0;
    // sum of dim g_j over -1 <= j < 1
    int dim_window = 0;
};

/// Direct verification of the good-grading definition for e = sum of the
/// simple root vectors of J (principal in the Levi; the only exceptional
/// representative supported) against the grading by ad(c), c given in
/// simple-root coordinates. Throws Unsupported when some J label is not 2.
GradingCheck ad_rank_check(const ChevalleyData& cd, const std::vector<int>& J, const Vec& c);

} // namespace ggp

#endif
