#ifndef GGP_RESTRICT_HPP
#define GGP_RESTRICT_HPP

// Restricted root systems Phi^J: nonzero orthogonal projections of roots
// to E^J, their bases and chambers, the restricted Weyl group W^J, and
// the Levi conjugacy classes K_J.
//
// Points and restricted roots are carried in coordinates over the basis
// {alpha_i^J : i in I} of E^J ("icoords"); those are integers for
// restricted roots and for every W^J matrix.

#include <cstdint>
#include <vector>

#include "ggp/exact.hpp"
#include "ggp/rootsys.hpp"

namespace ggp {

struct RestrictedRoot {
    std::vector<int> icoords;
    Vec evec;                 // projection in simple-root coordinates of E
    std::vector<int> fiber;   // ambient root indices with this restriction
    int ray = -1;             // hyperplane (proportionality class)
    int ray_scale = 0;        // icoords = ray_scale * ray primitive
    bool positive = false;
};

struct Ray {
    std::vector<int> primitive; // first nonzero entry positive, gcd 1
    std::vector<int> members;   // elem indices
    Vec normal_evec;            // primitive direction as an E-vector
};

struct RestrictedRootSystem {
    const RootSystem* rs = nullptr;
    std::vector<int> J, I;
    int m = 0;
    std::vector<Vec> basisJ; // alpha_i^J for i in I, in E coordinates
    Mat gramJ;               // (alpha_i^J, alpha_j^J)

    std::vector<RestrictedRoot> elems;
    std::vector<int> positives;
    std::vector<Ray> rays;
    int theta = -1; // restriction of the ambient highest root (-1 if Phi^J empty)

    int elem_index(const std::vector<int>& icoords) const;
    int negative_of(int e) const { return neg_[e]; }
    int diff(int a, int b) const { return diff_[static_cast<size_t>(a) * elems.size() + b]; }
    Rat inner_elems(int a, int b) const;
    /// (elems[a], x) with x a point in icoords.
    Rat eval(int a, const Vec& x_icoords) const;
    Vec to_evec(const Vec& icoords) const;

private:
    std::vector<int> neg_;
    std::vector<int> diff_;
    std::unordered_map<std::string, int> index_;
    friend RestrictedRootSystem restrict_roots(const RootSystem&, std::vector<int>);
};

RestrictedRootSystem restrict_roots(const RootSystem& rs, std::vector<int> J);

/// A base as a set of elem indices, sorted descending-lex by icoords
/// (this puts the standard base in the natural alpha_i^J order).
using RBase = std::vector<int>;

/// Indecomposable elements of Phi^J(gamma). gamma is given as a
/// lexicographic perturbation list of E-vectors: the sign of (alpha, gamma)
/// is the first nonzero sign down the list. Throws NonRegular if some
/// restricted root pairs to zero against the whole list.
RBase base_from_regular(const RestrictedRootSystem& rr, const std::vector<Vec>& gamma_lex);

struct Chamber {
    std::vector<std::uint64_t> signs; // bit per ray, 1 = positive side
    RBase base;
};

struct ChamberEnum {
    std::vector<Chamber> chambers;
    bool complete = true;
    long long visited = 0;
};

/// Wall-crossing BFS over chambers of A^J starting at the standard
/// chamber. The facets of a chamber are exactly the kernels of its base
/// elements, so neighbors are produced by flipping one base ray at a time.
ChamberEnum all_bases(const RestrictedRootSystem& rr, long long budget);

/// Interior point of the chamber of a base: the solution of
/// (x, beta_i) = 1 for all base elements (in icoords).
Vec chamber_witness(const RestrictedRootSystem& rr, const RBase& base);

/// Indecomposables of the standard positive system {alpha_i^J : i in I}-side,
/// i.e. the standard base Delta^J.
RBase standard_base(const RestrictedRootSystem& rr);

/// Entries 2(b_i, b_j) / (b_j, b_j).
Mat restricted_cartan(const RestrictedRootSystem& rr, const RBase& base);

struct RestrictedWeyl {
    Int order = 1;
    long long orbit_states = 0;
    std::vector<Mat> gens;     // m x m integer matrices acting on icoords
    std::vector<Mat> elements; // full list when enumerated (identity first)
    bool elements_enumerated = false;
};

/// W^J as the pointwise stabilizer of (alpha_j)_{j in J}: Schreier
/// generators from the BFS orbit of the ordered tuple under W, restricted
/// to E^J. Order comes from orbit-stabilizer. Throws BudgetExceeded when
/// the tuple orbit would exceed orbit_budget states.
RestrictedWeyl restricted_weyl(const RootSystem& rs, const std::vector<int>& J,
                               long long orbit_budget, long long elem_budget = 200000);

/// Closure of {identity} under right multiplication; stops and returns an
/// empty list when the group would exceed max_order elements.
std::vector<Mat> close_group(const std::vector<Mat>& gens, long long max_order);

struct LeviClasses {
    std::vector<std::vector<int>> members; // members[0] == J (sorted subsets)
    std::vector<Mat> witness;              // w_K with w_K . Delta_K = Delta_J
};

/// K_J by closure under elementary conjugations
/// K -> -w0(K + {a})(K) for a outside K.
LeviClasses levi_class(const RootSystem& rs, const std::vector<int>& J);

/// Longest element of the standard parabolic W_S as a word.
WeylWord longest_word(const RootSystem& rs, const std::vector<int>& S);

} // namespace ggp

#endif
