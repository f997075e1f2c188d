#include "ggp/arrange.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace ggp {

Arrangement arrangement_of(const RestrictedRootSystem& rr) {
    Arrangement arr;
    arr.dim = rr.m;
    for (const Ray& ray : rr.rays) {
        // functional y -> (primitive, y): integer after clearing denominators
        Vec f(rr.m);
        for (int k = 0; k < rr.m; ++k) {
            Rat s = 0;
            for (int l = 0; l < rr.m; ++l)
                if (ray.primitive[l] != 0) s += Rat(ray.primitive[l]) * rr.gramJ.at(l, k);
            f[k] = s;
        }
        Int lcm = 1;
        for (int k = 0; k < rr.m; ++k) lcm = lcm / gcd(lcm, f[k].get_den()) * f[k].get_den();
        for (int k = 0; k < rr.m; ++k) f[k] *= Rat(lcm);
        arr.normals.push_back(std::move(f));
    }
    return arr;
}

Int chamber_count(const RestrictedRootSystem& rr, long long budget) {
    auto ce = all_bases(rr, budget);
    if (ce.complete) return Int(static_cast<long>(ce.chambers.size()));
    auto coeffs = char_poly(arrangement_of(rr));
    Int v = eval_poly(coeffs, -1);
    return v < 0 ? Int(-v) : v;
}

namespace {

struct Flat {
    std::vector<std::uint64_t> contains; // bit per hyperplane
    std::vector<Vec> kernel;             // basis of the subspace
    int dim;
    Int mu;
};

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

struct KeyHash {
    size_t operator()(const std::vector<std::uint64_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

std::vector<Int> char_poly(const Arrangement& arr) {
    const int m = arr.dim;
    const int nh = static_cast<int>(arr.normals.size());
    const int words = std::max(1, (nh + 63) / 64);

    std::vector<Flat> flats;
    std::unordered_map<std::vector<std::uint64_t>, int, KeyHash> seen;

    // the whole space
    {
        Flat top;
        top.contains.assign(words, 0);
        top.dim = m;
        for (int i = 0; i < m; ++i) {
            Vec e(m);
            e[i] = 1;
            top.kernel.push_back(e);
        }
        seen[top.contains] = 0;
        flats.push_back(std::move(top));
    }

    auto hyperplanes_containing = [&](const std::vector<Vec>& kernel) {
        std::vector<std::uint64_t> s(words, 0);
        for (int h = 0; h < nh; ++h) {
            bool inside = true;
            for (const Vec& k : kernel)
                if (dot(arr.normals[h], k) != 0) { inside = false; break; }
            if (inside) s[h >> 6] |= std::uint64_t(1) << (h & 63);
        }
        return s;
    };

    // generate level by level: intersect each flat with each hyperplane
    for (size_t head = 0; head < flats.size(); ++head) {
        if (flats[head].dim == 0) continue;
        for (int h = 0; h < nh; ++h) {
            if ((flats[head].contains[h >> 6] >> (h & 63)) & 1) continue;
            // new subspace: kernel vectors of the flat orthogonal to normal h
            const auto& kern = flats[head].kernel;
            std::vector<Rat> vals;
            vals.reserve(kern.size());
            for (const Vec& k : kern) vals.push_back(dot(arr.normals[h], k));
            std::vector<Vec> nk;
            int pivot = -1;
            for (size_t i = 0; i < kern.size(); ++i)
                if (vals[i] != 0) { pivot = static_cast<int>(i); break; }
            if (pivot < 0) continue; // cannot happen (h would contain the flat)
            for (size_t i = 0; i < kern.size(); ++i) {
                if (static_cast<int>(i) == pivot) continue;
                Vec v = kern[i];
                if (vals[i] != 0) {
                    Vec adj = kern[pivot];
                    adj *= vals[i] / vals[pivot];
                    v -= adj;
                }
                nk.push_back(std::move(v));
            }
            auto key = hyperplanes_containing(nk);
            if (seen.count(key)) continue;
            Flat f;
            f.contains = key;
            f.kernel = std::move(nk);
            f.dim = flats[head].dim - 1;
            seen[f.contains] = static_cast<int>(flats.size());
            flats.push_back(std::move(f));
        }
    }

    // Moebius values top-down (flats are generated in order of codimension)
    std::vector<Int> coeffs(m + 1, 0);
    for (size_t i = 0; i < flats.size(); ++i) {
        Int mu = i == 0 ? Int(1) : Int(0);
        if (i > 0) {
            for (size_t j = 0; j < flats.size(); ++j) {
                if (j == i || flats[j].dim <= flats[i].dim) continue;
                if (subset_of(flats[j].contains, flats[i].contains)) mu -= flats[j].mu;
            }
        }
        flats[i].mu = mu;
        coeffs[flats[i].dim] += mu;
    }
    return coeffs;
}

Int eval_poly(const std::vector<Int>& coeffs, long long t) {
    Int v = 0;
    Int tt(static_cast<long>(t));
    for (size_t k = coeffs.size(); k-- > 0;) v = v * tt + coeffs[k];
    return v;
}

std::vector<int> exponents(const std::vector<Int>& cp) {
    std::vector<Int> p = cp;
    int deg = static_cast<int>(p.size()) - 1;
    std::vector<int> exps;
    // chi = prod (t - b_i); deflate integer roots in ascending order
    for (int b = 0; static_cast<int>(exps.size()) < deg;) {
        if (eval_poly(p, b) == 0) {
            // synthetic division by (t - b)
            std::vector<Int> q(p.size() - 1);
            Int carry = p.back();
            for (size_t k = p.size() - 1; k-- > 0;) {
                q[k] = carry;
                carry = p[k] + carry * b;
            }
            if (carry != 0) throw NonSplitting();
            p = std::move(q);
            exps.push_back(b);
        } else {
            ++b;
            if (b > 1000000) throw NonSplitting();
        }
    }
    return exps;
}

CoxeterH coxeter_h(const RootSystem& rs, const LeviClasses& kj) {
    CoxeterH out;
    out.h = -1;
    const auto& theta = rs.roots[rs.theta];
    for (const auto& K : kj.members) {
        // ht(theta^K): sum of theta coefficients over the complement of K;
        // verified below against the intrinsic highest root of Phi^K
        int ht = 0;
        for (int i = 0; i < rs.rank; ++i)
            if (std::find(K.begin(), K.end(), i) == K.end()) ht += theta[i];
        if (out.h < 0 || ht + 1 < out.h) {
            out.h = ht + 1;
            out.achieving_K = K;
        }
    }
    if (out.h < 0) {
        out.h = 1; // K_J empty cannot happen; defensive default
        return out;
    }
    // intrinsic cross-check on the achieving K: theta^K is the unique
    // coefficient-dominant element of Phi^K and its height matches
    {
        RestrictedRootSystem rk = restrict_roots(rs, out.achieving_K);
        if (rk.theta >= 0) {
            const auto& tc = rk.elems[rk.theta].icoords;
            for (const auto& e : rk.elems)
                for (int k = 0; k < rk.m; ++k)
                    if (e.icoords[k] > tc[k])
                        throw TheoremViolation("restricted highest root not dominant");
            int ht = std::accumulate(tc.begin(), tc.end(), 0);
            if (ht + 1 != out.h) throw TheoremViolation("h^J computed two ways disagrees");
        } else if (out.h != 1) {
            throw TheoremViolation("empty Phi^K must give h = 1");
        }
    }
    return out;
}

SommersReport sommers_check(const RootSystem& rs, int hJ, const std::vector<int>& exps) {
    SommersReport rep;
    const auto& theta = rs.roots[rs.theta];
    for (int p = 1; p < hJ; ++p) {
        bool coprime = true;
        for (int i = 0; i < rs.rank; ++i)
            if (std::gcd(p, theta[i]) != 1) { coprime = false; break; }
        if (!coprime) continue;
        rep.candidates.push_back(p);
        if (std::find(exps.begin(), exps.end(), p) == exps.end()) {
            rep.all_exponents = false;
            throw TheoremViolation("Sommers candidate " + std::to_string(p) +
                                   " is not an exponent");
        }
    }
    return rep;
}

} // namespace ggp
