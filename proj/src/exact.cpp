#include "ggp/exact.hpp"

#include <algorithm>
#include <sstream>

namespace ggp {

Rat rat(long num, long den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_int(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int below_int(const Rat& q) { return is_integer(q) ? Int(q.get_num() - 1) : floor_int(q); }

Int above_int(const Rat& q) { return is_integer(q) ? Int(q.get_num() + 1) : ceil_int(q); }

std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return rat(num, den);
    } catch (const std::invalid_argument&) {
        throw InvalidInput("cannot parse rational '" + s + "'");
    }
}

bool Vec::is_zero() const {
    for (const auto& x : v_)
        if (x != 0) return false;
    return true;
}

Vec& Vec::operator+=(const Vec& o) {
    if (size() != o.size()) throw DimensionMismatch();
    for (int i = 0; i < size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (size() != o.size()) throw DimensionMismatch();
    for (int i = 0; i < size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Vec& Vec::operator*=(const Rat& c) {
    for (auto& x : v_) x *= c;
    return *this;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    Rat s = 0;
    for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Mat::row(int i) const {
    Vec r(nc_);
    for (int j = 0; j < nc_; ++j) r[j] = at(i, j);
    return r;
}

Vec Mat::col(int j) const {
    Vec c(nr_);
    for (int i = 0; i < nr_; ++i) c[i] = at(i, j);
    return c;
}

Mat Mat::transposed() const {
    Mat t(nc_, nr_);
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Mat::mul(const Vec& x) const {
    if (x.size() != nc_) throw DimensionMismatch();
    Vec y(nr_);
    for (int i = 0; i < nr_; ++i) {
        Rat s = 0;
        for (int j = 0; j < nc_; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Mat Mat::mul(const Mat& o) const {
    if (nc_ != o.nr_) throw DimensionMismatch();
    Mat p(nr_, o.nc_);
    for (int i = 0; i < nr_; ++i)
        for (int k = 0; k < nc_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.nc_; ++j) p.at(i, j) += v * o.at(k, j);
        }
    return p;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Mat& m) {
    Mat c = m;
    return static_cast<int>(rref(c).size());
}

Rat det(Mat m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square matrix");
    Rat d = 1;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1)
        throw InvalidInput("singular matrix");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    Mat c = m;
    auto piv = rref(c);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.cols());
        v[j] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -c.at(static_cast<int>(r), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveOutcome solve_linear(const Mat& A, const Vec& b) {
    if (A.rows() != b.size()) throw DimensionMismatch();
    int n = A.cols();
    Mat aug(A.rows(), n + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto piv = rref(aug);
    for (int p : piv)
        if (p == n) return {SolveOutcome::NoSolution, Vec()};
    if (static_cast<int>(piv.size()) < n) return {SolveOutcome::Underdetermined, Vec()};
    Vec x(n);
    for (int r = 0; r < n; ++r) x[piv[r]] = aug.at(r, n);
    return {SolveOutcome::Unique, std::move(x)};
}

std::vector<std::vector<Int>> lattice_hnf(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return {};
    size_t nc = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != nc) throw DimensionMismatch("ragged HNF input");
    std::vector<std::vector<Int>> w = rows;
    size_t top = 0;
    for (size_t c = 0; c < nc && top < w.size(); ++c) {
        // combine all rows with a nonzero entry in column c into one gcd row
        size_t p = top;
        while (p < w.size() && w[p][c] == 0) ++p;
        if (p == w.size()) continue;
        std::swap(w[top], w[p]);
        for (size_t i = top + 1; i < w.size(); ++i) {
            if (w[i][c] == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       w[top][c].get_mpz_t(), w[i][c].get_mpz_t());
            Int u = w[top][c] / g, v = w[i][c] / g;
            for (size_t j = 0; j < nc; ++j) {
                Int a = w[top][j], b = w[i][j];
                w[top][j] = s * a + t * b;
                w[i][j] = u * b - v * a;
            }
        }
        if (w[top][c] < 0)
            for (size_t j = 0; j < nc; ++j) w[top][j] = -w[top][j];
        ++top;
    }
    w.resize(top);
    // reduce entries above each pivot
    for (size_t r = 0; r < w.size(); ++r) {
        size_t c = 0;
        while (c < nc && w[r][c] == 0) ++c;
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w[i][c].get_mpz_t(), w[r][c].get_mpz_t());
            if (q == 0) continue;
            for (size_t j = 0; j < nc; ++j) w[i][j] -= q * w[r][j];
        }
    }
    return w;
}

void LinearSystem::add_strict(Vec a, Rat b) {
    if (a.size() != dim) throw DimensionMismatch();
    strict.emplace_back(std::move(a), std::move(b));
}

void LinearSystem::add_weak(Vec a, Rat b) {
    if (a.size() != dim) throw DimensionMismatch();
    weak.emplace_back(std::move(a), std::move(b));
}

void LinearSystem::add_eq(Vec a, Rat b) {
    if (a.size() != dim) throw DimensionMismatch();
    eq.emplace_back(std::move(a), std::move(b));
}

namespace {

// Dense tableau simplex on  max c.z  s.t.  T z = t, z >= 0, solved with
// Bland's rule (exact arithmetic, always terminates).  Rows carry the
// current basis; column 0 of the tableau is the rhs.
class Tableau {
public:
    Tableau(int nrows, int nvars) : nr_(nrows), nv_(nvars), basis_(nrows), t_(nrows + 1, nvars + 1) {}

    Rat& cell(int i, int j) { return t_.at(i, j); }      // row 0 = objective
    int& basis(int i) { return basis_[i]; }               // constraint rows 1..nr

    // Bland's rule; entering columns restricted to 1..max_enter so that
    // artificials never re-enter. Returns false when unbounded (cannot
    // happen for our bounded programs).
    bool solve(int max_enter) {
        for (;;) {
            int enter = -1;
            for (int j = 1; j <= max_enter; ++j)
                if (t_.at(0, j) > 0) { enter = j; break; } // Bland: lowest index
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 1; i <= nr_; ++i) {
                if (t_.at(i, enter) <= 0) continue;
                Rat ratio = t_.at(i, 0) / t_.at(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i - 1] < basis_[leave - 1])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rat inv = 1 / t_.at(row, col);
        for (int j = 0; j <= nv_; ++j) t_.at(row, j) *= inv;
        for (int i = 0; i <= nr_; ++i) {
            if (i == row || t_.at(i, col) == 0) continue;
            Rat f = t_.at(i, col);
            for (int j = 0; j <= nv_; ++j) t_.at(i, j) -= f * t_.at(row, j);
        }
        basis_[row - 1] = col;
    }

    int nr_, nv_;

private:
    std::vector<int> basis_;
    Mat t_;
};

} // namespace

std::optional<Vec> feasible(const LinearSystem& sys) {
    const int n = sys.dim;
    // variables: eps (1), then x_i = u_i - w_i (2n), then one slack per
    // inequality row; artificials appended for phase 1.
    const int n_ineq = static_cast<int>(sys.strict.size() + sys.weak.size()) + 1; // + (eps <= 1)
    const int n_eq = static_cast<int>(sys.eq.size());
    const int rows = n_ineq + n_eq;
    const int structural = 1 + 2 * n + n_ineq;
    const int nvars = structural + rows; // worst case: artificial in every row

    Tableau tb(rows, nvars);
    // assemble rows: a.x + eps <= b (strict), a.x <= b (weak), eps <= 1, a.x = b
    int r = 1;
    int slack = 1 + 2 * n; // next slack column (1-based)
    auto put_row = [&](const Vec& a, const Rat& b, bool with_eps, bool inequality) {
        tb.cell(r, 0) = b;
        if (with_eps) tb.cell(r, 1) = 1;
        for (int j = 0; j < n; ++j) {
            tb.cell(r, 2 + 2 * j) = a[j];
            tb.cell(r, 3 + 2 * j) = -a[j];
        }
        if (inequality) tb.cell(r, ++slack) = 1;
        // normalize to nonnegative rhs
        if (tb.cell(r, 0) < 0)
            for (int j = 0; j <= nvars; ++j) tb.cell(r, j) = -tb.cell(r, j);
        ++r;
    };
    for (const auto& [a, b] : sys.strict) put_row(a, b, true, true);
    for (const auto& [a, b] : sys.weak) put_row(a, b, false, true);
    {
        Vec zero(n);
        put_row(zero, Rat(1), true, true); // eps <= 1
    }
    for (const auto& [a, b] : sys.eq) put_row(a, b, false, false);

    // phase 1: basis of artificials, minimize their sum
    int art0 = structural;
    for (int i = 1; i <= rows; ++i) {
        tb.cell(i, art0 + i) = 1;
        tb.basis(i - 1) = art0 + i;
        for (int j = 0; j <= art0; ++j) tb.cell(0, j) += tb.cell(i, j);
    }
    tb.solve(art0);
    if (tb.cell(0, 0) != 0) return std::nullopt; // relaxation infeasible
    // drive any artificial still in the basis out; an all-zero row is a
    // redundant constraint and may keep its artificial at value 0
    for (int i = 1; i <= rows; ++i) {
        if (tb.basis(i - 1) <= art0) continue;
        int enter = -1;
        for (int j = 1; j <= art0; ++j)
            if (tb.cell(i, j) != 0) { enter = j; break; }
        if (enter > 0) tb.pivot(i, enter);
    }

    // phase 2: maximize eps
    for (int j = 0; j <= nvars; ++j) tb.cell(0, j) = 0;
    tb.cell(0, 1) = 1;
    for (int i = 1; i <= rows; ++i) {
        int b = tb.basis(i - 1);
        if (tb.cell(0, b) != 0) {
            Rat f = tb.cell(0, b);
            for (int j = 0; j <= nvars; ++j) tb.cell(0, j) -= f * tb.cell(i, j);
        }
    }
    tb.solve(art0);

    Rat eps = -tb.cell(0, 0); // objective row rhs holds -(max eps)
    if (!sys.strict.empty() && eps <= 0) return std::nullopt;

    Vec x(n);
    for (int i = 1; i <= rows; ++i) {
        int b = tb.basis(i - 1);
        if (b >= 2 && b < 2 + 2 * n) {
            int j = (b - 2) / 2;
            if ((b - 2) % 2 == 0)
                x[j] += tb.cell(i, 0);
            else
                x[j] -= tb.cell(i, 0);
        }
    }
    return x;
}

} // namespace ggp
