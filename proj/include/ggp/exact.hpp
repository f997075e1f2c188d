#ifndef GGP_EXACT_HPP
#define GGP_EXACT_HPP

// Arbitrary-precision rational scalars and dense exact linear algebra.
// Every quantity in the library flows through these types; nothing here
// ever rounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ggp/errors.hpp"

namespace ggp {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den with canonicalization (mpq_class(n,d) alone does not reduce).
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);
Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);
/// Largest integer strictly smaller than q (so q-1 when q is integral).
Int below_int(const Rat& q);
/// Smallest integer strictly greater than q.
Int above_int(const Rat& q);

/// "a/b", or just "a" when b = 1. parse_rat accepts both forms.
std::string to_string(const Rat& q);
Rat parse_rat(const std::string& s);

class Vec {
public:
    Vec() = default;
    explicit Vec(int n) : v_(static_cast<size_t>(n)) {}
    Vec(std::initializer_list<Rat> xs) : v_(xs) {}

    int size() const { return static_cast<int>(v_.size()); }
    Rat& operator[](int i) { return v_[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    bool operator==(const Vec& o) const { return v_ == o.v_; }
    bool operator!=(const Vec& o) const { return v_ != o.v_; }

    bool is_zero() const;

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Rat& c);

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Rat& c, Vec a) { return a *= c; }

private:
    std::vector<Rat> v_;
};

/// Plain coordinate dot product (no Gram matrix).
Rat dot(const Vec& a, const Vec& b);

class Mat {
public:
    Mat() : nr_(0), nc_(0) {}
    Mat(int rows, int cols) : nr_(rows), nc_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return nr_; }
    int cols() const { return nc_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * nc_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * nc_ + j]; }

    bool operator==(const Mat& o) const { return nr_ == o.nr_ && nc_ == o.nc_ && a_ == o.a_; }

    Vec row(int i) const;
    Vec col(int j) const;
    Mat transposed() const;

    Vec mul(const Vec& x) const;
    Mat mul(const Mat& o) const;

private:
    int nr_, nc_;
    std::vector<Rat> a_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(const Mat& m);
Rat det(Mat m);
/// Inverse of a square matrix; throws InvalidInput when singular.
Mat inverse(const Mat& m);
/// Basis of the right kernel {x : Mx = 0}, one Vec per basis vector.
std::vector<Vec> kernel_basis(const Mat& m);

struct SolveOutcome {
    enum Kind { Unique, NoSolution, Underdetermined } kind;
    Vec x; // populated only for Unique
};

/// Exact solution of A x = b (classifies under/over-determination).
SolveOutcome solve_linear(const Mat& A, const Vec& b);

/// Hermite normal form basis of the integer row span of M: row echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Returns one row per basis vector of the span.
std::vector<std::vector<Int>> lattice_hnf(const std::vector<std::vector<Int>>& rows);

/// Mixed strict/non-strict/equality rational linear system in a fixed
/// ambient dimension. Constraints are (a, b) meaning a.x < b, a.x <= b
/// or a.x = b respectively.
struct LinearSystem {
    int dim = 0;
    std::vector<std::pair<Vec, Rat>> strict;
    std::vector<std::pair<Vec, Rat>> weak;
    std::vector<std::pair<Vec, Rat>> eq;

    explicit LinearSystem(int d) : dim(d) {}
    void add_strict(Vec a, Rat b);
    void add_weak(Vec a, Rat b);
    void add_eq(Vec a, Rat b);
};

/// Exact feasibility with a rational witness. Deterministic: identical
/// systems yield identical witnesses (Bland pivoting throughout).
std::optional<Vec> feasible(const LinearSystem& sys);

} // namespace ggp

#endif
