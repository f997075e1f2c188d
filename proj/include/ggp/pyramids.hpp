#ifndef GGP_PYRAMIDS_HPP
#define GGP_PYRAMIDS_HPP

// Classical-type pipeline: Dynkin pyramids for sl_n, sp_2n and so_N,
// explicit e/h matrices, the restricted data (Phi_e and d(alpha) by the
// closed formulas), polytopes, shifted pyramids, characteristics by
// column sorting, and W_e by explicit generators.

#include <map>
#include <vector>

#include "ggp/exact.hpp"
#include "ggp/grading.hpp"

namespace ggp {

enum class Classical { sl, sp, so };

Classical classical_from_string(const std::string& s);
std::string classical_to_string(Classical t);

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive
    int total = 0;

    explicit Partition(std::vector<int> p);
    int mult(int part) const;
};

/// Throws InvalidPartition on a parity violation (sp: odd parts need even
/// multiplicity; so: even parts need even multiplicity).
void validate_partition(Classical type, const Partition& lam);

struct Box {
    int id;  // 1..n, -1..-n, or 0 (so odd)
    int row; // y of the midpoint
    int col; // x of the midpoint
    bool skew;
};

struct Pyramid {
    Classical type;
    Partition lam;
    Pyramid(Classical t, Partition l) : type(t), lam(std::move(l)), n(0) {}
    int n;                       // positive labels 1..n
    bool has_zero = false;       // so odd: box 0 at the origin
    std::vector<Box> boxes;      // all boxes
    std::vector<int> upper_rows; // r_1 < ... < r_m, non-skew upper rows
    std::vector<int> lbar;       // boxes in row r_i

    const Box& box(int id) const;
    int m() const { return static_cast<int>(upper_rows.size()); }
};

Pyramid build_pyramid(Classical type, const Partition& lam);

/// Sparse rational matrix indexed by box ids.
struct SparseMat {
    std::map<std::pair<int, int>, Rat> entries; // (i, j) -> coefficient of e_{i,j}
    Rat at(int i, int j) const;
};

/// e as the sum over row-successor and skew-bridge pairs (signs from the
/// fixed Chevalley-type basis), h = sum col(i) e_{i,i}.
std::pair<SparseMat, SparseMat> matrices(const Pyramid& pyr);

/// Phi_e functionals on E_e in epsilon coordinates.
struct ClassicalRoot {
    std::vector<int> eps; // coefficient vector over eps_1..eps_m
    int d;                // bound of Theorem ggp
};

struct ClassicalNilpotent {
    Classical type;
    Partition lam;
    Pyramid pyr;
    SparseMat e, h;
    int m;                              // dim E_e for sp/so; parts count for sl
    std::vector<ClassicalRoot> phi_pos; // positive half of Phi_e
    std::vector<Mat> we_gens;           // W_e generators on (p_1..p_m)
    bool has_skew = false;

    // sl only: E_e = {sum lam_i p_i = 0}; sp/so: E_e = R^m
    bool sl_constraint() const { return type == Classical::sl; }
};

ClassicalNilpotent restricted_data(Classical type, const Partition& lam);

/// Polytope membership for p = (p_1..p_m): |alpha(p)| < d(alpha) for all
/// alpha in phi_pos (sl: p must satisfy the trace constraint).
bool classical_contains(const ClassicalNilpotent& cn, const Vec& p);

std::vector<Rat> classical_eval_vector(const ClassicalNilpotent& cn, const Vec& p);

/// Integral good gradings: points with alpha(p) in Z for all alpha, inside
/// the polytope. Sorted.
std::vector<Vec> classical_integral_points(const ClassicalNilpotent& cn);

/// Shifted pyramid pi(p): rows +-r_i slide by +-p_i (skew rows stay).
/// Column positions become rational.
std::map<int, Rat> shifted_columns(const ClassicalNilpotent& cn, const Vec& p);

/// Characteristic by sorting the shifted columns under the ambient Weyl
/// group (S_n / B_n / D_n), c_i as in the type-specific rules.
Characteristic classical_characteristic(const ClassicalNilpotent& cn, const Vec& p);

/// Direct good-grading test: grade the classical algebra by
/// deg e_{i,j} = col(i) - col(j) on pi(p) and check ad e ranks.
bool classical_oracle(const ClassicalNilpotent& cn, const Vec& p);

/// Jordan type of e from the rank sequence of its powers.
std::vector<int> jordan_type(const ClassicalNilpotent& cn);

/// For sl_n: the general-machinery datum (J, all labels 2) matching lam.
NilpotentDatum sl_datum(const Partition& lam);

struct ClassicalGraph {
    std::vector<Vec> reps;
    std::vector<Characteristic> labels;
    std::vector<std::pair<int, int>> edges;
    int dynkin_node = -1;
};

ClassicalGraph classical_adjacency_graph(const ClassicalNilpotent& cn);

} // namespace ggp

#endif
