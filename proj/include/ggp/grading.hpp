#ifndef GGP_GRADING_HPP
#define GGP_GRADING_HPP

// The good-grading engine: h from a labelled diagram, sl2 multiplicities
// m(alpha, i), the bounds d(alpha), the good grading polytope, integral
// good gradings, characteristics, W_e-conjugacy, component data and
// alcove adjacency graphs.

#include <map>
#include <vector>

#include "ggp/exact.hpp"
#include "ggp/restrict.hpp"

namespace ggp {

struct NilpotentDatum {
    std::vector<int> J;      // sorted
    std::vector<int> labels; // aligned with J, each 0 or 2
};

/// h in simple-root coordinates: the unique element of span(Delta_J) with
/// (alpha_j, h) = label_j for all j in J.
Vec solve_h(const RootSystem& rs, const NilpotentDatum& nd);

struct Sl2Decomposition {
    Vec h; // simple-root coordinates
    // aligned with rr.elems
    std::vector<std::map<long, long>> mult; // i -> m(alpha, i)
    std::vector<int> d;                     // 1 + min{i : m(alpha,i) != 0}
    std::vector<char> circ;                 // m(alpha, 0) != 0
    std::map<long, long> zero_mult;         // fiber over 0, Cartan included
};

/// Collects sum over the fiber of x^{beta(h)} per restricted root and
/// peels sl2 characters top-down. Throws NegativeMultiplicity when the
/// input labels do not give an sl2-decomposable character.
Sl2Decomposition sl2_multiplicities(const RestrictedRootSystem& rr, const Vec& h);

struct RayBound {
    int ray;
    Rat bound; // |(primitive_ray, p)| < bound
};

struct GoodGradingPolytope {
    const RestrictedRootSystem* rr = nullptr;
    std::vector<std::pair<int, int>> pairs; // (positive elem, d(alpha))
    std::vector<RayBound> ray_bounds;       // one tightened bound per ray
    std::vector<RayBound> irredundant;      // after negation-feasibility pruning
    std::vector<Vec> lattice;               // basis of {p : alpha(p) in Z}, icoords
};

GoodGradingPolytope polytope(const RestrictedRootSystem& rr, const Sl2Decomposition& dec);

bool polytope_contains(const GoodGradingPolytope& poly, const Vec& p_icoords);

/// All integrality-lattice points strictly inside the polytope, sorted.
std::vector<Vec> integral_points(const GoodGradingPolytope& poly);

struct Characteristic {
    std::vector<Rat> labels; // c_i = (alpha_i, dominant rep of h + p)
};

Characteristic characteristic(const RootSystem& rs, const Vec& h, const Vec& p_evec);

bool operator==(const Characteristic& a, const Characteristic& b);
std::string to_display(const Characteristic& c);

/// Alcove-closure adjacency on precomputed evaluation vectors
/// (alpha(p) for alpha running over Phi_e^+ in a fixed order).
bool adjacent_evals(const std::vector<Rat>& ep, const std::vector<Rat>& eq);

/// Evaluations of all positive restricted roots at p (icoords).
std::vector<Rat> eval_vector(const RestrictedRootSystem& rr, const Vec& p_icoords);

/// Theorem adj for two points of the polytope; throws OutsidePolytope.
bool adjacent(const GoodGradingPolytope& poly, const Vec& p, const Vec& q);

struct PointOrbits {
    std::vector<std::vector<int>> orbits; // index sets into the point list
    std::vector<int> rep;                 // lex-minimal representative per orbit
};

/// Partition of points into orbits of the group elements (matrices acting
/// on icoords).
PointOrbits we_orbits(const std::vector<Vec>& points, const std::vector<Mat>& elements);

struct ComponentData {
    RBase delta_circ;        // base of Phi_e^circ
    std::vector<Mat> w_circ; // W_e^circ elements
    std::vector<Mat> z_e;    // Z_e elements (subset of W_e)
};

/// Delta_e^circ from the circ roots, W_e^circ generated by their
/// reflections, Z_e = stabilizer in W_e of the circ-dominant chamber.
ComponentData component_data(const RestrictedRootSystem& rr, const Sl2Decomposition& dec,
                             const std::vector<Mat>& we_elements);

struct AdjacencyGraph {
    std::vector<Vec> reps;                  // icoords, one per W_e-class
    std::vector<Characteristic> labels;
    std::vector<std::pair<int, int>> edges; // i < j, no self loops
    int dynkin_node = -1;                   // class of p = 0
};

AdjacencyGraph adjacency_graph(const RootSystem& rs, const RestrictedRootSystem& rr,
                               const Sl2Decomposition& dec, const GoodGradingPolytope& poly,
                               const std::vector<Mat>& we_elements);

/// All label vectors in {0,2}^J that are distinguished in the Levi
/// (dim [l,l]_0 = dim [l,l]_2 for the induced grading).
std::vector<NilpotentDatum> distinguished_labels(const RootSystem& rs, const std::vector<int>& J);

/// Orbit dimension of the datum inside [l,l] (for ordering decorations).
int levi_orbit_dim(const RootSystem& rs, const NilpotentDatum& nd);

/// Deterministic rational sample points for oracle cross-checks: all
/// half-lattice points of the bounding box plus `extra` seeded rationals.
std::vector<Vec> sample_points(const GoodGradingPolytope& poly, unsigned long seed, int extra);

} // namespace ggp

#endif
