#ifndef GGP_ROOTSYS_HPP
#define GGP_ROOTSYS_HPP

// Root systems of types A..G in simple-root coordinates, with an exact
// W-invariant inner product (smallest integer symmetrization of the
// Cartan matrix). The Euclidean realization is implicit in the Gram
// matrix, which keeps every coordinate rational in types E/F/G.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggp/exact.hpp"

namespace ggp {

enum class Lie { A, B, C, D, E, F, G };

Lie lie_from_char(char c);
char lie_to_char(Lie t);

struct RootSystem {
    Lie type;
    int rank;

    // cartan[i][j] = <alpha_j, alpha_i^vee>; s_i(v) = v - <v, alpha_i^vee> alpha_i
    std::vector<std::vector<int>> cartan;
    Mat gram; // (alpha_i, alpha_j), integer entries

    // roots in simple-root coordinates; positives first (sorted by height
    // then lexicographically), then negatives in matching order, so that
    // the negative of root i is i +- num_pos.
    std::vector<std::vector<int>> roots;
    int num_pos = 0;
    int theta = -1; // index of the highest root

    // refl[s][r] = index of s_s(root r)
    std::vector<std::vector<int>> refl;

    bool is_positive(int r) const { return r < num_pos; }
    int negative_of(int r) const { return r < num_pos ? r + num_pos : r - num_pos; }
    int height(int r) const;
    int root_index(const std::vector<int>& coords) const; // -1 if absent
    Rat inner_roots(int a, int b) const;
    Rat norm2(int r) const { return inner_roots(r, r); }

    /// (v, alpha_i) for v in simple-root coordinates
    Rat inner_simple(const Vec& v, int i) const;
    Rat inner(const Vec& v, const Vec& w) const;
    /// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i)
    Rat pair_coroot(const Vec& v, int i) const;
    Vec root_vec(int r) const;
    Vec reflect(int s, const Vec& v) const;

    /// |W| for this type (exact).
    Int weyl_order() const;

private:
    std::unordered_map<std::string, int> index_;
    friend RootSystem build_root_system(Lie, int);
};

RootSystem build_root_system(Lie type, int rank);

/// Word in the simple reflections; act(v) applies gens left to right:
/// w = s_{g_k} ... s_{g_1} as an operator, i.e. gens[0] acts first.
struct WeylWord {
    std::vector<int> gens;
};

/// Dominant representative: returns (v_dom, w) with w.v = v_dom and
/// (v_dom, alpha_i) >= 0 for all i. Deterministic: always reflects at the
/// lowest negative coordinate first.
std::pair<Vec, WeylWord> dominant_rep(const RootSystem& rs, Vec v);

/// r x r integer matrix of the word acting on simple-root coordinates
/// (columns are images of the alpha_i).
Mat weyl_matrix(const RootSystem& rs, const WeylWord& w);

Vec apply_word(const RootSystem& rs, const WeylWord& w, Vec v);

} // namespace ggp

#endif
