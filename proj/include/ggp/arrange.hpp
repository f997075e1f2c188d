#ifndef GGP_ARRANGE_HPP
#define GGP_ARRANGE_HPP

// Analytics for the restriction arrangement A^J: chamber counts, the
// intersection lattice and characteristic polynomial, exponents, and the
// Coxeter-number analogue h^J with Sommers' primality test.

#include <vector>

#include "ggp/exact.hpp"
#include "ggp/restrict.hpp"

namespace ggp {

struct Arrangement {
    int dim = 0;                 // ambient dimension m
    std::vector<Vec> normals;    // pairwise non-proportional, nonzero
};

/// Hyperplanes of A^J as functionals on icoords (one per ray).
Arrangement arrangement_of(const RestrictedRootSystem& rr);

/// Exact chamber count: wall-crossing BFS when it fits the budget, else
/// Zaslavsky's |chi(-1)|.
Int chamber_count(const RestrictedRootSystem& rr, long long budget);

/// Characteristic polynomial coefficients, constant term first
/// (chi(t) = sum coeff[k] t^k), via the intersection lattice and Moebius
/// recursion. Whole space contributes t^dim.
std::vector<Int> char_poly(const Arrangement& arr);

Int eval_poly(const std::vector<Int>& coeffs, long long t);

/// Exponents b_1 <= ... <= b_m from the integer roots of chi; throws
/// NonSplitting if chi fails to factor over Z (would contradict freeness).
std::vector<int> exponents(const std::vector<Int>& char_poly_coeffs);

struct CoxeterH {
    int h = 1;
    std::vector<int> achieving_K; // subset realizing the minimum
};

/// h^J = 1 + min over K in K_J of ht(theta^K), where theta^K is the
/// unique highest root of Phi^K written in the standard base Delta^K
/// (equivalently, the theta-coefficient sum over the complement of K).
CoxeterH coxeter_h(const RootSystem& rs, const LeviClasses& kj);

struct SommersReport {
    std::vector<int> candidates; // 1 <= p < h^J, p prime to all theta coefficients
    bool all_exponents = true;   // every candidate is an exponent
};

/// Sommers' test; throws TheoremViolation if a candidate is missing from
/// the exponent list (that would indicate an implementation bug).
SommersReport sommers_check(const RootSystem& rs, int hJ, const std::vector<int>& exps);

} // namespace ggp

#endif
